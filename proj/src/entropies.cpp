#include "qentropy/entropies.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qentropy/errors.hpp"

namespace qentropy {

namespace {

// Below this |alpha - beta| the two-parameter sum switches to the expm1
// kernel; the generic difference of powers is accurate above it.
constexpr double kTwoParamSeriesBand = 1e-8;

// sum p^q, zero terms skipped.
double power_sum(const ProbabilityDistribution& p, double q) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back(std::pow(pj, q));
    }
  }
  return compensated_sum(terms);
}

}  // namespace

TwoParam::TwoParam(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !std::isfinite(beta) || !(beta > 0.0)) {
    throw DomainError("two-parameter entropy needs alpha, beta > 0, got (" + std::to_string(alpha) +
                      ", " + std::to_string(beta) + ")");
  }
}

std::string_view to_string(EntropyFamily family) noexcept {
  switch (family) {
    case EntropyFamily::shannon:
      return "shannon";
    case EntropyFamily::renyi:
      return "renyi";
    case EntropyFamily::tsallis:
      return "tsallis";
    case EntropyFamily::tsallis_normalized:
      return "tsallis_normalized";
    case EntropyFamily::two_param:
      return "two_param";
  }
  return "unknown";
}

EntropyValue shannon(const ProbabilityDistribution& p) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back(-pj * std::log(pj));
    }
  }
  return {compensated_sum(terms), EntropyFamily::shannon, QParam(1.0)};
}

EntropyValue renyi(const ProbabilityDistribution& p, QParam q) {
  if (q.is_classical()) {
    return {shannon(p).value, EntropyFamily::renyi, q};
  }
  // Near sum p^q = 1 (q close to 1) accumulate sum p^q - 1 as
  // sum p (p^(q-1) - 1) and take log1p; far from 1 the plain log is the
  // accurate one.
  const double qm1 = q.value() - 1.0;
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back(pj * std::expm1(qm1 * std::log(pj)));
    }
  }
  const double excess = compensated_sum(terms);
  const double log_sum =
      std::abs(excess) < 0.5 ? std::log1p(excess) : std::log(power_sum(p, q.value()));
  return {log_sum / (1.0 - q.value()), EntropyFamily::renyi, q};
}

EntropyValue tsallis(const ProbabilityDistribution& p, QParam q) {
  if (q.is_classical()) {
    return {shannon(p).value, EntropyFamily::tsallis, q};
  }
  const double qv = q.value();
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back((pj - std::pow(pj, qv)) / (qv - 1.0));
    }
  }
  return {compensated_sum(terms), EntropyFamily::tsallis, q};
}

EntropyValue tsallis_qexp_form(const ProbabilityDistribution& p, QParam q) {
  if (q.is_classical()) {
    return {shannon(p).value, EntropyFamily::tsallis, q};
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back(-std::pow(pj, q.value()) * q_log(pj, q));
    }
  }
  return {compensated_sum(terms), EntropyFamily::tsallis, q};
}

EntropyValue tsallis_expect_form(const ProbabilityDistribution& p, QParam q) {
  if (q.is_classical()) {
    return {shannon(p).value, EntropyFamily::tsallis, q};
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double pj : p.probs()) {
    if (pj > 0.0) {
      terms.push_back(pj * q_log(1.0 / pj, q));
    }
  }
  return {compensated_sum(terms), EntropyFamily::tsallis, q};
}

EntropyValue normalized_tsallis(const ProbabilityDistribution& p, QParam q) {
  if (q.is_classical()) {
    return {shannon(p).value, EntropyFamily::tsallis_normalized, q};
  }
  const double s = tsallis(p, q).value;
  return {s / power_sum(p, q.value()), EntropyFamily::tsallis_normalized, q};
}

EntropyValue two_param_entropy(const ProbabilityDistribution& p, TwoParam ab) {
  const double a = ab.alpha();
  const double b = ab.beta();
  if (a == 1.0 && b == 1.0) {
    return {shannon(p).value, EntropyFamily::two_param, ab};
  }
  std::vector<double> terms;
  terms.reserve(p.size());
  if (ab.degenerate()) {
    for (double pj : p.probs()) {
      if (pj > 0.0) {
        terms.push_back(-std::pow(pj, a) * std::log(pj));
      }
    }
  } else if (std::abs(a - b) <= kTwoParamSeriesBand) {
    // (p^a - p^b)/(b - a) = -p^a (p^(b-a) - 1)/(b - a)
    for (double pj : p.probs()) {
      if (pj > 0.0) {
        terms.push_back(-std::pow(pj, a) * expm1_ratio(b - a, std::log(pj)));
      }
    }
  } else {
    for (double pj : p.probs()) {
      if (pj > 0.0) {
        terms.push_back((std::pow(pj, a) - std::pow(pj, b)) / (b - a));
      }
    }
  }
  return {compensated_sum(terms), EntropyFamily::two_param, ab};
}

double q_expectation(std::span<const double> values, const ProbabilityDistribution& p, QParam q) {
  if (values.size() != p.size()) {
    throw ValidationError("q_expectation: " + std::to_string(values.size()) + " values for " +
                          std::to_string(p.size()) + " probabilities");
  }
  std::vector<double> terms(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double weight = q.is_classical() ? p[j] : std::pow(p[j], q.value());
    terms[j] = weight * values[j];
  }
  return compensated_sum(terms);
}

double normalized_q_expectation(std::span<const double> values, const ProbabilityDistribution& p,
                                QParam q) {
  if (values.size() != p.size()) {
    throw ValidationError("normalized_q_expectation: " + std::to_string(values.size()) +
                          " values for " + std::to_string(p.size()) + " probabilities");
  }
  // Numerator and denominator go through identical arithmetic so a constant
  // vector maps back to itself exactly.
  std::vector<double> weights(p.size());
  std::vector<double> terms(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    weights[j] = q.is_classical() ? p[j] : std::pow(p[j], q.value());
    terms[j] = weights[j] * values[j];
  }
  return compensated_sum(terms) / compensated_sum(weights);
}

EntropyValue renyi_from_tsallis(double tsallis_value, QParam q) {
  if (q.is_classical()) {
    return {tsallis_value, EntropyFamily::renyi, q};
  }
  const double shifted = (1.0 - q.value()) * tsallis_value;
  if (!(1.0 + shifted > 0.0)) {
    throw DomainError("renyi_from_tsallis: 1 + (1-q) S_q = " + std::to_string(1.0 + shifted) +
                      " is not positive");
  }
  return {std::log1p(shifted) / (1.0 - q.value()), EntropyFamily::renyi, q};
}

EntropyValue renyi_from_tsallis(const EntropyValue& s, QParam q) {
  if (s.family != EntropyFamily::tsallis) {
    throw ValidationError("renyi_from_tsallis expects a tsallis value, got " +
                          std::string(to_string(s.family)));
  }
  return renyi_from_tsallis(s.value, q);
}

}  // namespace qentropy
