#include "qentropy/distributions.hpp"

#include <algorithm>
#include <cmath>

#include <string>

#include "qentropy/errors.hpp"

namespace qentropy {

bool ProbabilityDistribution::strictly_positive() const noexcept {
  return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
}

double compensated_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

ProbabilityDistribution make_distribution(std::span<const double> raw) {
  if (raw.empty()) {
    throw ValidationError("probability vector is empty");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw ValidationError("probability entry " + std::to_string(i) + " is not finite");
    }
    if (raw[i] < 0.0) {
      throw ValidationError("probability entry " + std::to_string(i) + " is negative");
    }
  }
  const double total = compensated_sum(raw);
  if (std::abs(total - 1.0) > kNormalizationSlack) {
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  std::vector<double> probs(raw.begin(), raw.end());
  if (total != 1.0) {
    for (double& p : probs) {
      p /= total;
    }
  }
  return ProbabilityDistribution(std::move(probs));
}

ProbabilityDistribution product(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
  std::vector<double> joint;
  joint.reserve(p.size() * q.size());
  for (double pi : p.probs()) {
    for (double qj : q.probs()) {
      joint.push_back(pi * qj);
    }
  }
  return ProbabilityDistribution(std::move(joint));
}

ProbabilityDistribution uniform(std::size_t n) {
  if (n == 0) {
    throw ValidationError("uniform distribution needs at least one outcome");
  }
  return ProbabilityDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityDistribution sample_flat_simplex(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) {
    throw ValidationError("simplex dimension must be at least 1");
  }
  std::exponential_distribution<double> unit_exp(1.0);
  std::vector<double> draws(n);
  for (double& d : draws) {
    do {
      d = unit_exp(rng);
    } while (!(d > 0.0));
  }
  const double total = compensated_sum(draws);
  for (double& d : draws) {
    d /= total;
  }
  return make_distribution(draws);
}

std::vector<ProbabilityDistribution> random_corpus(std::size_t count, std::size_t min_n,
                                                   std::size_t max_n, std::uint64_t seed) {
  if (min_n == 0 || min_n > max_n) {
    throw ValidationError("corpus sizes need 1 <= min_n <= max_n");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_n, max_n);
  std::vector<ProbabilityDistribution> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(sample_flat_simplex(size_dist(rng), rng));
  }
  return out;
}

}  // namespace qentropy
