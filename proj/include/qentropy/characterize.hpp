#pragma once

#include <cstddef>
#include <vector>

#include "qentropy/entropies.hpp"
#include "qentropy/funceq.hpp"
#include "qentropy/qcalculus.hpp"
#include "qentropy/scalar_function.hpp"

namespace qentropy {

/// -f'(1) from the one-sided stencil -(3f(1) - 4f(1-h) + f(1-2h))/(2h).
/// Only f on [1-2h, 1] is sampled. Throws ValidationError unless 0 < h <= 1e-3.
double extract_constant(const ScalarFunction& f, double h);

/// A solution recovered by integrating a first-order ODE backward from the
/// boundary condition f(1) = 0.
struct OdeRecovery {
  std::vector<double> xs;      // ascending grid, xs.back() == 1
  std::vector<double> fs;      // recovered f at xs; fs.back() == 0 exactly
  std::vector<double> slopes;  // f' at xs, evaluated from the ODE
  double c = 0.0;
  double compare_sup = 0.0;    // sup |fs - closed form| over xs
  std::size_t substeps = 0;    // RK4 steps per grid interval at acceptance

  // Every RK node of the accepted integration, ascending, with ODE slopes.
  // This is the table the interpolant runs on.
  std::vector<double> table_xs;
  std::vector<double> table_fs;
  std::vector<double> table_slopes;

  /// Cubic Hermite interpolant through the dense table. Defined on
  /// [xs.front(), 1]; DomainError below xs.front().
  ScalarFunction as_function() const;
};

/// Successive step-halvings must agree to this sup-norm before acceptance.
inline constexpr double kOdeRefinementTol = 1e-10;

/// Integrates x f' - beta f = -c x^alpha with f(1) = 0 (alpha == beta
/// included) and compares with closed_form_solution(ab, c). The grid must
/// end at 1. Throws NumericalError if refinement stalls.
OdeRecovery solve_ode_thm2(TwoParam ab, double c, const GridSpec& grid);

/// Integrates x g' + (1-q) g = -c with g(1) = 0, returns f = x g and compares
/// with closed_form_solution(q, c). q = 1 is regular (g = -c ln x).
OdeRecovery solve_ode_prop1(QParam q, double c, const GridSpec& grid);

/// Cubic Hermite interpolation on an ascending table. Exposed for
/// calibrating the interpolation error against closed forms.
ScalarFunction hermite_interpolant(std::string name, std::vector<double> xs, std::vector<double> fs,
                                   std::vector<double> slopes);

/// g(x) = c (x^(q-1) - 1)/(1 - q), the closed form of f(x)/x.
double closed_form_ratio(QParam q, double c, double x);

/// |g(y/2^N) - [g(1/2) y^(q-1) (2^(N(1-q)) - 1)/(2^(1-q) - 1) + g(y)]| for
/// the closed-form g. At q = 1 the geometric factor is its limit N.
/// Requires y in (0,1] and 1 <= N <= 40.
double dyadic_recursion_check(QParam q, double c, double y, int depth);

struct DyadicLimit {
  std::vector<double> ratios;  // g(y/2^N)/2^N for N = 1..N_max
  double bound = 0.0;          // allowed magnitude of the final ratio
  int tail_start = 1;          // |ratios| strictly decrease from this N on
  bool tail_decreasing = false;
  bool final_within_bound = false;
};

/// Sequence showing g(y/2^N)/2^N -> 0. The tail starts at the first N where
/// A r^N (2 - r) > 1 (A = y^(q-1), r = 2^(1-q)), i.e. once the growth of
/// g no longer keeps pace with 2^N; from N = 1 when q > 1. The bound is
/// max(1e-10, 4 * 2^(-N_max min(q,1)) * max(|g(y)|, |g(1/2)|)).
/// Requires y in (0,1] and 1 <= N_max <= 40.
DyadicLimit dyadic_limit_check(QParam q, double c, double y, int n_max);

}  // namespace qentropy
