#pragma once

#include <functional>
#include <string>

namespace qentropy {

/// A real function on (0,1]: a closed form, an interpolated table, or a
/// user-supplied candidate. Calls outside (0,1] throw DomainError.
class ScalarFunction {
public:
  using Fn = std::function<double(double)>;

  ScalarFunction(std::string name, Fn fn);

  double operator()(double x) const;
  const std::string& name() const noexcept { return name_; }

  /// x -> c * f(x)
  ScalarFunction scaled(double c) const;
  /// x -> f(x) + g(x)
  ScalarFunction plus(const ScalarFunction& other) const;

  static ScalarFunction zero();

private:
  std::string name_;
  Fn fn_;
};

}  // namespace qentropy
