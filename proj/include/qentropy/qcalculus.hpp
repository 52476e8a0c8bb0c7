#pragma once

// q-deformed elementary functions.
//
// The q-logarithm ln_q(x) = (x^(1-q) - 1) / (1 - q) reduces to the natural
// logarithm at q = 1. Every function here treats q = 1 through its analytic
// limit and never evaluates a 0/0 form.

namespace qentropy {

/// Deformation parameter q > 0. q = 1 is the classical (Shannon) point.
class QParam {
public:
  /// Throws DomainError unless q is finite and strictly positive.
  explicit QParam(double q);

  double value() const noexcept { return q_; }
  bool is_classical() const noexcept { return q_ == 1.0; }

  friend bool operator==(const QParam&, const QParam&) = default;

private:
  double q_;
};

/// ln_q(x). Throws DomainError for x <= 0 or non-finite x.
double q_log(double x, QParam q);

/// |ln_q(x) - ln(x)|, a diagnostic for the q -> 1 convergence.
double q_log_limit_gap(double x, QParam q);

/// (exp(t*s) - 1) / t, with the t = 0 limit s. Shared kernel for every
/// deformed quantity of the form (y^t - 1)/t with s = ln y.
double expm1_ratio(double t, double s) noexcept;

}  // namespace qentropy
