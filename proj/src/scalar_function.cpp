#include "qentropy/scalar_function.hpp"

#include <cmath>
#include <utility>

#include "qentropy/errors.hpp"

namespace qentropy {

ScalarFunction::ScalarFunction(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {
  if (!fn_) {
    throw ValidationError("ScalarFunction '" + name_ + "' has no callable");
  }
}

double ScalarFunction::operator()(double x) const {
  if (!std::isfinite(x) || !(x > 0.0) || x > 1.0) {
    throw DomainError(name_ + " evaluated outside (0,1] at x = " + std::to_string(x));
  }
  return fn_(x);
}

ScalarFunction ScalarFunction::scaled(double c) const {
  return ScalarFunction(std::to_string(c) + "*" + name_, [fn = fn_, c](double x) { return c * fn(x); });
}

ScalarFunction ScalarFunction::plus(const ScalarFunction& other) const {
  return ScalarFunction(name_ + "+" + other.name_,
                        [f = fn_, g = other.fn_](double x) { return f(x) + g(x); });
}

ScalarFunction ScalarFunction::zero() {
  return ScalarFunction("zero", [](double) { return 0.0; });
}

}  // namespace qentropy
