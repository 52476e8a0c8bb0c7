#include "qentropy/identities.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "detail/text.hpp"
#include "qentropy/errors.hpp"
#include "qentropy/funceq.hpp"

namespace qentropy {

using detail::shortest;

namespace {

IdentityResidual make_residual(double lhs, double rhs, IdentityKind kind) {
  return {std::abs(lhs - rhs), lhs, rhs, kind};
}

void require_positive_entries(const ProbabilityDistribution& d, const char* which) {
  if (!d.strictly_positive()) {
    throw DomainError(std::string(which) + " has a zero entry; the candidate lives on (0,1)");
  }
}

double sum_of(const ScalarFunction& f, const ProbabilityDistribution& d) {
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double v : d.probs()) {
    terms.push_back(f(v));
  }
  return compensated_sum(terms);
}

double power_sum(const ProbabilityDistribution& d, double exponent) {
  std::vector<double> terms;
  terms.reserve(d.size());
  for (double v : d.probs()) {
    terms.push_back(v > 0.0 ? std::pow(v, exponent) : 0.0);
  }
  return compensated_sum(terms);
}

}  // namespace

std::string_view to_string(IdentityKind kind) noexcept {
  switch (kind) {
    case IdentityKind::tsallis_nonadditivity:
      return "tsallis_nonadditivity";
    case IdentityKind::normalized_nonadditivity:
      return "normalized_nonadditivity";
    case IdentityKind::renyi_additivity:
      return "renyi_additivity";
    case IdentityKind::kannappan:
      return "kannappan";
    case IdentityKind::remark_sum_tsallis:
      return "remark_sum_tsallis";
    case IdentityKind::remark_sum_normalized:
      return "remark_sum_normalized";
  }
  return "unknown";
}

IdentityResidual tsallis_nonadditivity_residual(const ProbabilityDistribution& p,
                                                const ProbabilityDistribution& q, QParam param) {
  const double sp = tsallis(p, param).value;
  const double sq = tsallis(q, param).value;
  const double joint = tsallis(product(p, q), param).value;
  const double rhs = sp + sq + (1.0 - param.value()) * sp * sq;
  return make_residual(joint, rhs, IdentityKind::tsallis_nonadditivity);
}

IdentityResidual normalized_nonadditivity_residual(const ProbabilityDistribution& p,
                                                   const ProbabilityDistribution& q, QParam param) {
  const double sp = normalized_tsallis(p, param).value;
  const double sq = normalized_tsallis(q, param).value;
  const double joint = normalized_tsallis(product(p, q), param).value;
  const double rhs = sp + sq + (param.value() - 1.0) * sp * sq;
  return make_residual(joint, rhs, IdentityKind::normalized_nonadditivity);
}

IdentityResidual renyi_additivity_residual(const ProbabilityDistribution& p,
                                           const ProbabilityDistribution& q, QParam param) {
  const double joint = renyi(product(p, q), param).value;
  const double rhs = renyi(p, param).value + renyi(q, param).value;
  return make_residual(joint, rhs, IdentityKind::renyi_additivity);
}

IdentityResidual kannappan_residual(const ScalarFunction& f, const ProbabilityDistribution& p,
                                    const ProbabilityDistribution& q, TwoParam ab) {
  require_positive_entries(p, "P");
  require_positive_entries(q, "Q");
  std::vector<double> joint_terms;
  joint_terms.reserve(p.size() * q.size());
  for (double pi : p.probs()) {
    for (double qj : q.probs()) {
      joint_terms.push_back(f(pi * qj));
    }
  }
  const double lhs = compensated_sum(joint_terms);
  const double rhs =
      power_sum(p, ab.alpha()) * sum_of(f, q) + power_sum(q, ab.beta()) * sum_of(f, p);
  return make_residual(lhs, rhs, IdentityKind::kannappan);
}

ScalarFunction kannappan_solution(const KannappanClosedForm& form, TwoParam ab) {
  const double a = ab.alpha();
  const double b = ab.beta();
  const double c = form.c;
  switch (form.kase) {
    case KannappanCase::generic:
      if (ab.degenerate()) {
        throw ValidationError("generic Kannappan solution needs alpha != beta");
      }
      return ScalarFunction("kannappan_generic(c=" + shortest(c) + ")",
                            [a, b, c](double x) { return c * (std::pow(x, a) - std::pow(x, b)); });
    case KannappanCase::equal:
      if (!ab.degenerate() || a == 1.0) {
        throw ValidationError("equal-exponent Kannappan solution needs alpha == beta != 1");
      }
      return ScalarFunction("kannappan_equal(c=" + shortest(c) + ")",
                            [a, c](double x) { return c * std::pow(x, a) * std::log(x); });
    case KannappanCase::classical: {
      if (!(a == 1.0 && b == 1.0)) {
        throw ValidationError("classical Kannappan solution needs alpha == beta == 1");
      }
      if (form.m == 0 || form.n == 0) {
        throw ValidationError("classical Kannappan solution needs positive sizes m, n");
      }
      const double m = static_cast<double>(form.m);
      const double n = static_cast<double>(form.n);
      const double slope = form.b * (m * n - m - n);
      const double offset = form.b;
      return ScalarFunction(
          "kannappan_classical(c=" + shortest(c) + ",b=" + shortest(form.b) + ",m=" +
              std::to_string(form.m) + ",n=" + std::to_string(form.n) + ")",
          [c, slope, offset](double x) { return c * x * std::log(x) + slope * x + offset; });
    }
  }
  throw ValidationError("unknown Kannappan case");
}

std::pair<double, double> decomposition_residuals(double x, double y, QParam q, double c) {
  for (double v : {x, y}) {
    if (!std::isfinite(v) || !(v > 0.0) || v > 1.0) {
      throw DomainError("decomposition argument " + shortest(v) + " is outside (0,1]");
    }
  }
  const ScalarFunction f = closed_form_solution(q, c);
  const double qv = q.value();
  const double fx = f(x);
  const double fy = f(y);
  const double fxy = f(x * y);
  const double first = y * fx + x * fy + (1.0 - qv) * fx * fy;
  const double second = std::pow(y, qv) * fx + std::pow(x, qv) * fy + (qv - 1.0) * fx * fy;
  return {std::abs(fxy - first), std::abs(fxy - second)};
}

double symmetrized_residual(const ScalarFunction& f, double x, double y, QParam q) {
  return std::abs(residual_symmetrized(f, x, y, q));
}

std::pair<IdentityResidual, IdentityResidual> remark_sum_residuals(const ProbabilityDistribution& p,
                                                                   const ProbabilityDistribution& q,
                                                                   QParam param) {
  require_positive_entries(p, "P");
  require_positive_entries(q, "Q");
  const ScalarFunction f = closed_form_solution(param, 1.0);
  const double qv = param.value();
  std::vector<double> first_terms;
  std::vector<double> second_terms;
  for (double pi : p.probs()) {
    const double fp = f(pi);
    for (double qj : q.probs()) {
      const double fq = f(qj);
      first_terms.push_back(qj * fp + pi * fq + (1.0 - qv) * fp * fq);
      second_terms.push_back(std::pow(qj, qv) * fp + std::pow(pi, qv) * fq + (qv - 1.0) * fp * fq);
    }
  }
  const double first_sum = compensated_sum(first_terms);
  const double second_sum = compensated_sum(second_terms) / (power_sum(p, qv) * power_sum(q, qv));

  const double sp = tsallis(p, param).value;
  const double sq = tsallis(q, param).value;
  const double np = normalized_tsallis(p, param).value;
  const double nq = normalized_tsallis(q, param).value;
  return {make_residual(first_sum, sp + sq + (1.0 - qv) * sp * sq, IdentityKind::remark_sum_tsallis),
          make_residual(second_sum, np + nq + (qv - 1.0) * np * nq,
                        IdentityKind::remark_sum_normalized)};
}

}  // namespace qentropy
