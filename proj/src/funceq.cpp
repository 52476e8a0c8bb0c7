#include "qentropy/funceq.hpp"

#include <algorithm>
#include <cmath>

#include "detail/text.hpp"
#include "qentropy/errors.hpp"

namespace qentropy {

using detail::shortest;

namespace {

void require_unit_interval(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0) || v > 1.0) {
    throw DomainError(std::string(what) + " = " + shortest(v) + " is outside (0,1]");
  }
}

void require_open_unit_interval(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0) || !(v < 1.0)) {
    throw DomainError(std::string(what) + " = " + shortest(v) + " is outside (0,1)");
  }
}

// Running Neumaier sum; the mean of a sweep is reproducible to the last bit
// for a fixed traversal order.
class CompensatedAccumulator {
public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double total() const noexcept { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

double residual_prop1(const ScalarFunction& f, double x, double y, QParam q) {
  require_open_unit_interval(x, "x");
  require_unit_interval(y, "y");
  const double weight = q.is_classical() ? y : std::pow(y, q.value());
  return f(x * y) + f((1.0 - x) * y) - f(y) - (f(x) + f(1.0 - x)) * weight;
}

double residual_cor1(const ScalarFunction& f, double x, double y) {
  return residual_prop1(f, x, y, QParam(1.0));
}

double residual_thm2(const ScalarFunction& f, double x, double y, TwoParam ab) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  return f(x * y) - std::pow(x, ab.alpha()) * f(y) - std::pow(y, ab.beta()) * f(x);
}

double residual_cor2(const ScalarFunction& f, double x, double y, QParam q) {
  return residual_thm2(f, x, y, TwoParam(q.value(), 1.0));
}

double residual_cor3(const ScalarFunction& f, double x, double y) {
  return residual_thm2(f, x, y, TwoParam(1.0, 1.0));
}

double residual_symmetrized(const ScalarFunction& f, double x, double y, QParam q) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  const double wx = 0.5 * (std::pow(x, q.value()) + x);
  const double wy = 0.5 * (std::pow(y, q.value()) + y);
  return f(x * y) - wx * f(y) - wy * f(x);
}

double EquationId::residual(const ScalarFunction& f, double x, double y) const {
  switch (kind_) {
    case EquationKind::prop1:
      return residual_prop1(f, x, y, *q_);
    case EquationKind::cor1:
      return residual_cor1(f, x, y);
    case EquationKind::thm2:
      return residual_thm2(f, x, y, *ab_);
    case EquationKind::cor2:
      return residual_cor2(f, x, y, *q_);
    case EquationKind::cor3:
      return residual_cor3(f, x, y);
    case EquationKind::symmetrized:
      return residual_symmetrized(f, x, y, *q_);
  }
  throw ValidationError("unknown equation kind");
}

std::string to_string(EquationKind kind) {
  switch (kind) {
    case EquationKind::prop1:
      return "prop1";
    case EquationKind::cor1:
      return "cor1";
    case EquationKind::thm2:
      return "thm2";
    case EquationKind::cor2:
      return "cor2";
    case EquationKind::cor3:
      return "cor3";
    case EquationKind::symmetrized:
      return "symmetrized";
  }
  return "unknown";
}

EquationKind parse_equation_kind(const std::string& name) {
  for (auto kind : {EquationKind::prop1, EquationKind::cor1, EquationKind::thm2, EquationKind::cor2,
                    EquationKind::cor3, EquationKind::symmetrized}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw ValidationError("unknown equation '" + name +
                        "' (expected prop1, cor1, thm2, cor2, cor3 or symmetrized)");
}

std::string EquationId::label() const {
  std::string out = to_string(kind_);
  if (q_) {
    out += "(q=" + shortest(q_->value()) + ")";
  } else if (ab_) {
    out += "(alpha=" + shortest(ab_->alpha()) + ",beta=" + shortest(ab_->beta()) + ")";
  }
  return out;
}

void GridSpec::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min > 0.0) || !(x_min < x_max) ||
      x_max > 1.0) {
    throw ValidationError("grid bounds must satisfy 0 < x_min < x_max <= 1, got [" +
                          shortest(x_min) + ", " + shortest(x_max) + "]");
  }
  if (count < 2) {
    throw ValidationError("grid needs at least 2 points, got " + std::to_string(count));
  }
}

std::vector<double> GridSpec::points() const {
  validate();
  std::vector<double> xs(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / last;
    xs[i] = spacing == GridSpacing::geometric ? x_min * std::pow(x_max / x_min, t)
                                              : x_min + (x_max - x_min) * t;
  }
  xs.front() = x_min;
  xs.back() = x_max;
  return xs;
}

ScalarFunction closed_form_solution(QParam q, double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ValidationError("closed-form constant c must be >= 0, got " + shortest(c));
  }
  const std::string name = "closed_form(q=" + shortest(q.value()) + ",c=" + shortest(c) + ")";
  if (q.is_classical()) {
    return ScalarFunction(name, [c](double x) { return -c * x * std::log(x); });
  }
  return ScalarFunction(name, [c, q](double x) { return -c * std::pow(x, q.value()) * q_log(x, q); });
}

ScalarFunction closed_form_solution(TwoParam ab, double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ValidationError("closed-form constant c must be >= 0, got " + shortest(c));
  }
  const double a = ab.alpha();
  const double b = ab.beta();
  const std::string name =
      "closed_form(alpha=" + shortest(a) + ",beta=" + shortest(b) + ",c=" + shortest(c) + ")";
  if (ab.degenerate()) {
    return ScalarFunction(name, [c, a](double x) { return -c * std::pow(x, a) * std::log(x); });
  }
  // (x^b - x^a)/(a - b) = -x^b (x^(a-b) - 1)/(a - b)
  return ScalarFunction(
      name, [c, a, b](double x) { return -c * std::pow(x, b) * expm1_ratio(a - b, std::log(x)); });
}

ScalarFunction closed_form_solution(const DeformParams& params, double c) {
  return std::visit([c](const auto& p) { return closed_form_solution(p, c); }, params);
}

ScalarFunction closed_form_for(const EquationId& eq, double c) {
  switch (eq.kind()) {
    case EquationKind::prop1:
    case EquationKind::cor2:
    case EquationKind::symmetrized:
      return closed_form_solution(*eq.q(), c);
    case EquationKind::cor1:
    case EquationKind::cor3:
      return closed_form_solution(QParam(1.0), c);
    case EquationKind::thm2:
      return closed_form_solution(*eq.ab(), c);
  }
  throw ValidationError("unknown equation kind");
}

ResidualReport sup_residual_on_grid(const ScalarFunction& f, const EquationId& eq,
                                    const GridSpec& grid) {
  const std::vector<double> ys = grid.points();
  std::vector<double> xs = ys;
  if (eq.open_first_argument()) {
    if (!(grid.x_min < 0.5)) {
      throw ValidationError(eq.label() + " needs x_min < 0.5 so that x can stay inside (0,1)");
    }
    const double hi = 1.0 - grid.x_min;
    for (double& x : xs) {
      x = std::clamp(x, grid.x_min, hi);
    }
  }

  ResidualReport report;
  report.argmax_x = xs.front();
  report.argmax_y = ys.front();
  CompensatedAccumulator total;
  for (double x : xs) {
    for (double y : ys) {
      double r = 0.0;
      try {
        r = eq.residual(f, x, y);
      } catch (const std::exception& e) {
        throw NumericalError(eq.label() + " failed at (x=" + shortest(x) + ", y=" + shortest(y) +
                             "): " + e.what());
      }
      if (!std::isfinite(r)) {
        throw NumericalError(eq.label() + " residual is not finite at (x=" + shortest(x) +
                             ", y=" + shortest(y) + ") for " + f.name());
      }
      const double a = std::abs(r);
      total.add(a);
      if (a > report.sup_abs) {
        report.sup_abs = a;
        report.argmax_x = x;
        report.argmax_y = y;
      }
      ++report.points_evaluated;
    }
  }
  report.mean_abs = total.total() / static_cast<double>(report.points_evaluated);
  // Rounding in the mean must not break mean <= sup.
  report.mean_abs = std::min(report.mean_abs, report.sup_abs);
  return report;
}

}  // namespace qentropy
