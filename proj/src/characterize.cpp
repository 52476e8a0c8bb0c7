#include "qentropy/characterize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "detail/text.hpp"
#include "qentropy/errors.hpp"

namespace qentropy {

using detail::shortest;

namespace {

constexpr std::size_t kMaxSubsteps = std::size_t{1} << 16;

using Rhs = std::function<double(double, double)>;

double rk4_step(const Rhs& rhs, double x, double y, double h) {
  const double k1 = rhs(x, y);
  const double k2 = rhs(x + 0.5 * h, y + 0.5 * h * k1);
  const double k3 = rhs(x + 0.5 * h, y + 0.5 * h * k2);
  const double k4 = rhs(x + h, y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Values at every node of `xs` (ascending, last == 1) for y(1) = 0, using
// `substeps` equal RK4 steps per interval, marching from 1 downward. When
// `dense` is given it receives every RK node, ascending.
struct DenseTable {
  std::vector<double> xs;
  std::vector<double> ys;
};

std::vector<double> integrate_backward(const Rhs& rhs, const std::vector<double>& xs,
                                       std::size_t substeps, DenseTable* dense = nullptr) {
  std::vector<double> ys(xs.size(), 0.0);
  if (dense != nullptr) {
    dense->xs.assign(1, xs.back());
    dense->ys.assign(1, 0.0);
  }
  double y = 0.0;
  for (std::size_t i = xs.size() - 1; i > 0; --i) {
    const double x_hi = xs[i];
    const double h = (xs[i - 1] - x_hi) / static_cast<double>(substeps);
    for (std::size_t s = 0; s < substeps; ++s) {
      y = rk4_step(rhs, x_hi + static_cast<double>(s) * h, y, h);
      if (dense != nullptr) {
        dense->xs.push_back(s + 1 == substeps ? xs[i - 1] : x_hi + static_cast<double>(s + 1) * h);
        dense->ys.push_back(y);
      }
    }
    ys[i - 1] = y;
  }
  if (dense != nullptr) {
    std::reverse(dense->xs.begin(), dense->xs.end());
    std::reverse(dense->ys.begin(), dense->ys.end());
  }
  return ys;
}

struct Refined {
  std::vector<double> values;
  DenseTable dense;
  std::size_t substeps;
};

Refined integrate_with_halving(const Rhs& rhs, const std::vector<double>& xs) {
  std::size_t substeps = 1;
  std::vector<double> coarse = integrate_backward(rhs, xs, substeps);
  while (substeps < kMaxSubsteps) {
    substeps *= 2;
    DenseTable dense;
    std::vector<double> fine = integrate_backward(rhs, xs, substeps, &dense);
    double diff = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      diff = std::max(diff, std::abs(fine[i] - coarse[i]));
    }
    if (!std::isfinite(diff)) {
      throw NumericalError("ODE integration produced a non-finite value");
    }
    if (diff < kOdeRefinementTol) {
      return {std::move(fine), std::move(dense), substeps};
    }
    coarse = std::move(fine);
  }
  throw NumericalError("ODE step halving did not converge within " + std::to_string(kMaxSubsteps) +
                       " substeps per interval");
}

std::vector<double> ode_grid(const GridSpec& grid) {
  if (grid.x_max != 1.0) {
    throw ValidationError("ODE recovery integrates from the boundary x = 1; grid must end at 1");
  }
  return grid.points();
}

void require_constant(double c) {
  if (!std::isfinite(c) || c < 0.0) {
    throw ValidationError("constant c must be >= 0, got " + shortest(c));
  }
}

double compare_with(const ScalarFunction& closed, const std::vector<double>& xs,
                    const std::vector<double>& fs) {
  double sup = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sup = std::max(sup, std::abs(fs[i] - closed(xs[i])));
  }
  return sup;
}

void require_depth(int depth, double y) {
  if (depth < 1 || depth > 40) {
    throw DomainError("dyadic depth must be in [1, 40], got " + std::to_string(depth));
  }
  if (!std::isfinite(y) || !(y > 0.0) || y > 1.0) {
    throw DomainError("dyadic base point y = " + shortest(y) + " is outside (0,1]");
  }
}

}  // namespace

double extract_constant(const ScalarFunction& f, double h) {
  if (!std::isfinite(h) || !(h > 0.0) || h > 1e-3) {
    throw ValidationError("finite-difference step must satisfy 0 < h <= 1e-3, got " + shortest(h));
  }
  return -(3.0 * f(1.0) - 4.0 * f(1.0 - h) + f(1.0 - 2.0 * h)) / (2.0 * h);
}

ScalarFunction hermite_interpolant(std::string name, std::vector<double> xs, std::vector<double> fs,
                                   std::vector<double> slopes) {
  if (xs.size() < 2 || fs.size() != xs.size() || slopes.size() != xs.size()) {
    throw ValidationError("Hermite table needs >= 2 nodes with matching values and slopes");
  }
  return ScalarFunction(std::move(name), [xs = std::move(xs), fs = std::move(fs),
                                          ds = std::move(slopes)](double x) {
    // products of grid points can land a rounding error below the table
    if (x < xs.front() && x >= xs.front() * (1.0 - 1e-12)) {
      x = xs.front();
    }
    if (x < xs.front() || x > xs.back()) {
      throw DomainError("recovered table covers [" + shortest(xs.front()) + ", " +
                        shortest(xs.back()) + "], asked for " + shortest(x));
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    if (hi == xs.size()) {
      return fs.back();
    }
    const std::size_t lo = hi - 1;
    const double h = xs[hi] - xs[lo];
    const double t = (x - xs[lo]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * fs[lo] + h10 * h * ds[lo] + h01 * fs[hi] + h11 * h * ds[hi];
  });
}

ScalarFunction OdeRecovery::as_function() const {
  return hermite_interpolant("recovered(c=" + shortest(c) + ")", table_xs, table_fs,
                             table_slopes);
}

OdeRecovery solve_ode_thm2(TwoParam ab, double c, const GridSpec& grid) {
  require_constant(c);
  const std::vector<double> xs = ode_grid(grid);
  const double a = ab.alpha();
  const double b = ab.beta();
  // x f' - beta f = -c x^alpha
  const Rhs rhs = [a, b, c](double x, double f) { return (b * f - c * std::pow(x, a)) / x; };
  Refined solved = integrate_with_halving(rhs, xs);

  OdeRecovery out;
  out.xs = xs;
  out.fs = std::move(solved.values);
  out.fs.back() = 0.0;
  out.slopes.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.slopes[i] = rhs(xs[i], out.fs[i]);
  }
  out.table_xs = std::move(solved.dense.xs);
  out.table_fs = std::move(solved.dense.ys);
  out.table_fs.back() = 0.0;
  out.table_slopes.resize(out.table_xs.size());
  for (std::size_t i = 0; i < out.table_xs.size(); ++i) {
    out.table_slopes[i] = rhs(out.table_xs[i], out.table_fs[i]);
  }
  out.c = c;
  out.substeps = solved.substeps;
  out.compare_sup = compare_with(closed_form_solution(ab, c), out.xs, out.fs);
  return out;
}

OdeRecovery solve_ode_prop1(QParam q, double c, const GridSpec& grid) {
  require_constant(c);
  const std::vector<double> xs = ode_grid(grid);
  const double one_minus_q = 1.0 - q.value();
  // x g' + (1-q) g = -c
  const Rhs rhs = [one_minus_q, c](double x, double g) { return (-c - one_minus_q * g) / x; };
  Refined solved = integrate_with_halving(rhs, xs);

  OdeRecovery out;
  out.xs = xs;
  out.fs.resize(xs.size());
  out.slopes.resize(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double g = solved.values[i];
    out.fs[i] = xs[i] * g;
    // f' = g + x g' = q g - c
    out.slopes[i] = q.value() * g - c;
  }
  out.fs.back() = 0.0;
  out.table_xs = std::move(solved.dense.xs);
  out.table_fs.resize(out.table_xs.size());
  out.table_slopes.resize(out.table_xs.size());
  for (std::size_t i = 0; i < out.table_xs.size(); ++i) {
    const double g = solved.dense.ys[i];
    out.table_fs[i] = out.table_xs[i] * g;
    out.table_slopes[i] = q.value() * g - c;
  }
  out.table_fs.back() = 0.0;
  out.c = c;
  out.substeps = solved.substeps;
  out.compare_sup = compare_with(closed_form_solution(q, c), out.xs, out.fs);
  return out;
}

double closed_form_ratio(QParam q, double c, double x) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError("g is defined for x > 0, got " + shortest(x));
  }
  // c (x^(q-1) - 1)/(1-q) = -c (x^(q-1) - 1)/(q-1)
  return -c * expm1_ratio(q.value() - 1.0, std::log(x));
}

double dyadic_recursion_check(QParam q, double c, double y, int depth) {
  require_depth(depth, y);
  const double qv = q.value();
  const double ln2 = std::numbers::ln2;
  // (2^(N(1-q)) - 1)/(2^(1-q) - 1)
  const double geometric = q.is_classical() ? static_cast<double>(depth)
                                            : std::expm1(depth * (1.0 - qv) * ln2) /
                                                  std::expm1((1.0 - qv) * ln2);
  const double lhs = closed_form_ratio(q, c, std::ldexp(y, -depth));
  const double rhs =
      closed_form_ratio(q, c, 0.5) * std::pow(y, qv - 1.0) * geometric + closed_form_ratio(q, c, y);
  return std::abs(lhs - rhs);
}

DyadicLimit dyadic_limit_check(QParam q, double c, double y, int n_max) {
  require_depth(n_max, y);
  const double qv = q.value();
  DyadicLimit out;
  out.ratios.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    out.ratios.push_back(std::ldexp(closed_form_ratio(q, c, std::ldexp(y, -n)), -n));
  }

  if (qv > 1.0) {
    out.tail_start = 1;
  } else if (q.is_classical()) {
    out.tail_start = y < 1.0 ? 1 : 2;
  } else {
    const double growth = std::pow(2.0, 1.0 - qv);
    const double scale = std::pow(y, qv - 1.0);
    out.tail_start = n_max;
    for (int n = 1; n <= n_max; ++n) {
      if (scale * std::pow(growth, n) * (2.0 - growth) > 1.0) {
        out.tail_start = n;
        break;
      }
    }
  }

  out.tail_decreasing = true;
  for (int n = out.tail_start; n < n_max; ++n) {
    const double now = std::abs(out.ratios[static_cast<std::size_t>(n - 1)]);
    const double next = std::abs(out.ratios[static_cast<std::size_t>(n)]);
    const bool ok = c == 0.0 ? (now == 0.0 && next == 0.0) : next < now;
    if (!ok) {
      out.tail_decreasing = false;
      break;
    }
  }

  const double scale = std::max(std::abs(closed_form_ratio(q, c, y)),
                                std::abs(closed_form_ratio(q, c, 0.5)));
  out.bound = std::max(1e-10, 4.0 * std::exp2(-n_max * std::min(qv, 1.0)) * scale);
  out.final_within_bound = std::abs(out.ratios.back()) <= out.bound;
  return out;
}

}  // namespace qentropy
