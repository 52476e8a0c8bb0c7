#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qentropy/entropies.hpp"
#include "qentropy/qcalculus.hpp"
#include "qentropy/scalar_function.hpp"

namespace qentropy {

// Functional equations characterizing the entropy functions, written as
// signed residuals lhs - rhs. All are linear in f.
//
//   prop1        f(xy) + f((1-x)y) - f(y) = (f(x) + f(1-x)) y^q,  0<x<1, 0<y<=1
//   cor1         prop1 at q = 1
//   thm2         f(xy) = x^alpha f(y) + y^beta f(x),              0<x,y<=1
//   cor2         thm2 at (alpha, beta) = (q, 1)
//   cor3         thm2 at (1, 1)
//   symmetrized  f(xy) = ((x^q + x)/2) f(y) + ((y^q + y)/2) f(x)

double residual_prop1(const ScalarFunction& f, double x, double y, QParam q);
double residual_cor1(const ScalarFunction& f, double x, double y);
double residual_thm2(const ScalarFunction& f, double x, double y, TwoParam ab);
double residual_cor2(const ScalarFunction& f, double x, double y, QParam q);
double residual_cor3(const ScalarFunction& f, double x, double y);
double residual_symmetrized(const ScalarFunction& f, double x, double y, QParam q);

enum class EquationKind { prop1, cor1, thm2, cor2, cor3, symmetrized };

/// An equation tag together with the parameters it needs.
class EquationId {
public:
  static EquationId prop1(QParam q) { return {EquationKind::prop1, q, std::nullopt}; }
  static EquationId cor1() { return {EquationKind::cor1, std::nullopt, std::nullopt}; }
  static EquationId thm2(TwoParam ab) { return {EquationKind::thm2, std::nullopt, ab}; }
  static EquationId cor2(QParam q) { return {EquationKind::cor2, q, std::nullopt}; }
  static EquationId cor3() { return {EquationKind::cor3, std::nullopt, std::nullopt}; }
  static EquationId symmetrized(QParam q) { return {EquationKind::symmetrized, q, std::nullopt}; }

  EquationKind kind() const noexcept { return kind_; }
  const std::optional<QParam>& q() const noexcept { return q_; }
  const std::optional<TwoParam>& ab() const noexcept { return ab_; }

  /// Equations whose first argument must lie strictly inside (0,1).
  bool open_first_argument() const noexcept {
    return kind_ == EquationKind::prop1 || kind_ == EquationKind::cor1;
  }

  double residual(const ScalarFunction& f, double x, double y) const;

  /// e.g. "thm2(alpha=2,beta=3)"
  std::string label() const;

private:
  EquationId(EquationKind kind, std::optional<QParam> q, std::optional<TwoParam> ab)
      : kind_(kind), q_(q), ab_(ab) {}

  EquationKind kind_;
  std::optional<QParam> q_;
  std::optional<TwoParam> ab_;
};

/// Parse "prop1", "cor1", ... Throws ValidationError for an unknown name.
EquationKind parse_equation_kind(const std::string& name);
std::string to_string(EquationKind kind);

enum class GridSpacing { linear, geometric };

struct GridSpec {
  double x_min = 1e-3;
  double x_max = 1.0;
  std::size_t count = 200;
  GridSpacing spacing = GridSpacing::geometric;

  /// Throws ValidationError unless 0 < x_min < x_max <= 1 and count >= 2.
  void validate() const;
  /// Ascending; first point is x_min and last is exactly x_max.
  std::vector<double> points() const;
};

struct ResidualReport {
  double sup_abs = 0.0;
  double mean_abs = 0.0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  std::size_t points_evaluated = 0;
};

/// Closed-form solutions, all vanishing at x = 1 and nonnegative on (0,1]:
///   q:            -c x^q ln_q x           (q = 1: -c x ln x)
///   alpha!=beta:  c (x^beta - x^alpha)/(alpha - beta)
///   alpha==beta:  -c x^alpha ln x
/// Throws ValidationError for c < 0.
ScalarFunction closed_form_solution(QParam q, double c);
ScalarFunction closed_form_solution(TwoParam ab, double c);
ScalarFunction closed_form_solution(const DeformParams& params, double c);

/// The closed form matching an equation, e.g. the q form for prop1/cor2.
ScalarFunction closed_form_for(const EquationId& eq, double c);

/// Sweep every (x, y) pair of the grid. For prop1/cor1 the first argument
/// is clamped to [x_min, 1 - x_min]. Any evaluation failure or non-finite
/// residual is rethrown as NumericalError naming the offending point.
ResidualReport sup_residual_on_grid(const ScalarFunction& f, const EquationId& eq,
                                    const GridSpec& grid);

}  // namespace qentropy
