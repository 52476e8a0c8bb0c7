#pragma once

// Independent reference computations for the tests. Everything here works in
// long double straight from the defining formulas and shares no code with
// the library's evaluation paths.

#include <cmath>
#include <functional>
#include <vector>

namespace qentropy::oracle {

using Real = long double;

inline Real q_log(Real x, Real q) {
  if (q == 1.0L) {
    return std::log(x);
  }
  return (std::pow(x, 1.0L - q) - 1.0L) / (1.0L - q);
}

inline Real shannon(const std::vector<double>& p) {
  Real s = 0.0L;
  for (double v : p) {
    if (v > 0.0) {
      s -= static_cast<Real>(v) * std::log(static_cast<Real>(v));
    }
  }
  return s;
}

inline Real tsallis(const std::vector<double>& p, Real q) {
  if (q == 1.0L) {
    return shannon(p);
  }
  Real s = 0.0L;
  for (double v : p) {
    if (v > 0.0) {
      s += (static_cast<Real>(v) - std::pow(static_cast<Real>(v), q)) / (q - 1.0L);
    }
  }
  return s;
}

inline Real renyi(const std::vector<double>& p, Real q) {
  if (q == 1.0L) {
    return shannon(p);
  }
  Real s = 0.0L;
  for (double v : p) {
    if (v > 0.0) {
      s += std::pow(static_cast<Real>(v), q);
    }
  }
  return std::log(s) / (1.0L - q);
}

inline std::vector<double> product(const std::vector<double>& p, const std::vector<double>& q) {
  std::vector<double> out;
  for (double a : p) {
    for (double b : q) {
      out.push_back(a * b);
    }
  }
  return out;
}

// sup over the square grid of |f(xy) - x^a f(y) - y^b f(x)|, brute force.
inline Real thm2_sup(const std::function<Real(Real)>& f, const std::vector<double>& grid, Real a,
                     Real b) {
  Real sup = 0.0L;
  for (double xd : grid) {
    for (double yd : grid) {
      const Real x = xd;
      const Real y = yd;
      const Real r = f(x * y) - std::pow(x, a) * f(y) - std::pow(y, b) * f(x);
      sup = std::max(sup, std::abs(r));
    }
  }
  return sup;
}

// g(y/2^N) by applying the one-step relation g(t/2) = g(1/2) t^(q-1) + g(t)
// N times, starting from the closed-form g(y) and g(1/2).
inline Real dyadic_by_iteration(Real q, Real c, Real y, int depth) {
  auto g = [&](Real x) { return c * (std::pow(x, q - 1.0L) - 1.0L) / (1.0L - q); };
  const Real g_half = g(0.5L);
  Real t = y;
  Real value = g(y);
  for (int k = 0; k < depth; ++k) {
    value = g_half * std::pow(t, q - 1.0L) + value;
    t /= 2.0L;
  }
  return value;
}

}  // namespace qentropy::oracle
