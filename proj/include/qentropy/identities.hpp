#pragma once

#include <string_view>
#include <utility>

#include "qentropy/distributions.hpp"
#include "qentropy/entropies.hpp"
#include "qentropy/qcalculus.hpp"
#include "qentropy/scalar_function.hpp"

namespace qentropy {

enum class IdentityKind {
  tsallis_nonadditivity,     // S(PxQ) = S(P) + S(Q) + (1-q) S(P) S(Q)
  normalized_nonadditivity,  // same with S^nor and coefficient (q-1)
  renyi_additivity,          // R(PxQ) = R(P) + R(Q)
  kannappan,                 // sum_ij f(p_i q_j) = sum p^a sum f(q) + sum q^b sum f(p)
  remark_sum_tsallis,        // pointwise decomposition summed over PxQ vs the Tsallis rhs
  remark_sum_normalized,     // same for the normalized relation
};

std::string_view to_string(IdentityKind kind) noexcept;

struct IdentityResidual {
  double residual;  // |lhs - rhs|
  double lhs;
  double rhs;
  IdentityKind identity;
};

IdentityResidual tsallis_nonadditivity_residual(const ProbabilityDistribution& p,
                                                const ProbabilityDistribution& q, QParam param);
IdentityResidual normalized_nonadditivity_residual(const ProbabilityDistribution& p,
                                                   const ProbabilityDistribution& q, QParam param);
IdentityResidual renyi_additivity_residual(const ProbabilityDistribution& p,
                                           const ProbabilityDistribution& q, QParam param);

/// Requires every entry of p and q to be strictly positive (DomainError
/// otherwise), since the candidate lives on (0,1).
IdentityResidual kannappan_residual(const ScalarFunction& f, const ProbabilityDistribution& p,
                                    const ProbabilityDistribution& q, TwoParam ab);

enum class KannappanCase {
  generic,    // alpha != beta:    c (p^alpha - p^beta)
  equal,      // alpha == beta != 1: c p^alpha ln p
  classical,  // alpha == beta == 1: c p ln p + b (mn - m - n) p + b
};

/// Parameters of a Kannappan solution. b, m and n only matter in the
/// classical case, where m and n are the sizes of the two distributions the
/// function will be tested on.
struct KannappanClosedForm {
  KannappanCase kase = KannappanCase::generic;
  double c = 1.0;
  double b = 0.0;
  std::size_t m = 1;
  std::size_t n = 1;
};

/// Throws ValidationError when the case does not match (alpha, beta).
ScalarFunction kannappan_solution(const KannappanClosedForm& form, TwoParam ab);

/// Residuals of the two pointwise relations, with f(x) = -c x^q ln_q x:
///   first:  f(xy) = y f(x) + x f(y) + (1-q) f(x) f(y)
///   second: f(xy) = y^q f(x) + x^q f(y) + (q-1) f(x) f(y)
/// Both hold exactly only for c = 1.
std::pair<double, double> decomposition_residuals(double x, double y, QParam q, double c);

/// |f(xy) - [((x^q+x)/2) f(y) + ((y^q+y)/2) f(x)]|
double symmetrized_residual(const ScalarFunction& f, double x, double y, QParam q);

/// Sum the right-hand sides of the two pointwise relations (c = 1) over all
/// (p_i, q_j) and compare with the Tsallis and normalized-Tsallis
/// non-additivity right-hand sides. Requires strictly positive entries.
std::pair<IdentityResidual, IdentityResidual> remark_sum_residuals(const ProbabilityDistribution& p,
                                                                   const ProbabilityDistribution& q,
                                                                   QParam param);

}  // namespace qentropy
