#pragma once

#include <span>
#include <string_view>
#include <variant>

#include "qentropy/distributions.hpp"
#include "qentropy/qcalculus.hpp"

namespace qentropy {

/// Exponent pair (alpha, beta) of the two-parameter entropy; both > 0.
/// alpha == beta is allowed and selects the logarithmic limit form.
class TwoParam {
public:
  /// Throws DomainError unless both parameters are finite and > 0.
  TwoParam(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  bool degenerate() const noexcept { return alpha_ == beta_; }

  friend bool operator==(const TwoParam&, const TwoParam&) = default;

private:
  double alpha_;
  double beta_;
};

/// Either a single deformation parameter or an (alpha, beta) pair.
using DeformParams = std::variant<QParam, TwoParam>;

enum class EntropyFamily { shannon, renyi, tsallis, tsallis_normalized, two_param };

std::string_view to_string(EntropyFamily family) noexcept;

/// An entropy in nats, tagged with the family and parameters it came from.
/// Shannon values carry q = 1.
struct EntropyValue {
  double value;
  EntropyFamily family;
  DeformParams params;
};

EntropyValue shannon(const ProbabilityDistribution& p);

/// (1/(1-q)) ln sum p^q; q = 1 gives Shannon.
EntropyValue renyi(const ProbabilityDistribution& p, QParam q);

// Three algebraically equivalent Tsallis forms, each computed on its own
// path so they can check one another. q = 1 gives Shannon in all three.

/// sum (p - p^q)/(q - 1), the defining form.
EntropyValue tsallis(const ProbabilityDistribution& p, QParam q);
/// -sum p^q ln_q p.
EntropyValue tsallis_qexp_form(const ProbabilityDistribution& p, QParam q);
/// sum p ln_q(1/p).
EntropyValue tsallis_expect_form(const ProbabilityDistribution& p, QParam q);

/// S_q / sum p^q.
EntropyValue normalized_tsallis(const ProbabilityDistribution& p, QParam q);

/// sum (p^alpha - p^beta)/(beta - alpha); -sum p^alpha ln p when alpha == beta.
EntropyValue two_param_entropy(const ProbabilityDistribution& p, TwoParam ab);

/// sum p^q v. Throws ValidationError on a length mismatch.
double q_expectation(std::span<const double> values, const ProbabilityDistribution& p, QParam q);

/// sum p^q v / sum p^q. Maps a constant vector to that constant.
double normalized_q_expectation(std::span<const double> values, const ProbabilityDistribution& p,
                                QParam q);

/// Renyi entropy from a Tsallis value: ln(1 + (1-q) s)/(1-q).
/// Throws DomainError when 1 + (1-q) s <= 0. At q = 1 both families are
/// Shannon and s is returned unchanged.
EntropyValue renyi_from_tsallis(double tsallis_value, QParam q);

/// As above, but also checks that `s` is tagged as a Tsallis value.
EntropyValue renyi_from_tsallis(const EntropyValue& s, QParam q);

}  // namespace qentropy
