#include "qentropy/qcalculus.hpp"

#include <cmath>
#include <string>

#include "qentropy/errors.hpp"

namespace qentropy {

QParam::QParam(double q) : q_(q) {
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw DomainError("deformation parameter q must be finite and > 0, got " + std::to_string(q));
  }
}

double expm1_ratio(double t, double s) noexcept {
  if (t == 0.0) {
    return s;
  }
  return std::expm1(t * s) / t;
}

double q_log(double x, QParam q) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError("q_log requires a finite x > 0, got " + std::to_string(x));
  }
  const double log_x = std::log(x);
  if (q.is_classical()) {
    return log_x;
  }
  // x^(1-q) - 1 written as expm1((1-q) ln x): no cancellation when x^(1-q)
  // is close to 1, whether because q is near 1 or x is near 1.
  return expm1_ratio(1.0 - q.value(), log_x);
}

double q_log_limit_gap(double x, QParam q) {
  const double deformed = q_log(x, q);
  return std::abs(deformed - std::log(x));
}

}  // namespace qentropy
