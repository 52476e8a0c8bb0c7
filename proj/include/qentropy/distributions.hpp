#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qentropy {

/// A finite probability vector: nonempty, entries in [0,1], summing to 1.
///
/// Zero entries are allowed. Entropy consumers use 0 ln 0 = 0 and 0^q = 0.
/// Immutable once constructed.
class ProbabilityDistribution {
public:
  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  bool strictly_positive() const noexcept;

  friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;

private:
  explicit ProbabilityDistribution(std::vector<double> probs) : probs_(std::move(probs)) {}

  friend ProbabilityDistribution make_distribution(std::span<const double> raw);
  friend ProbabilityDistribution product(const ProbabilityDistribution& p,
                                         const ProbabilityDistribution& q);
  friend ProbabilityDistribution uniform(std::size_t n);

  std::vector<double> probs_;
};

/// Raw sums may deviate from 1 by this much before being rejected.
inline constexpr double kNormalizationSlack = 1e-9;

/// Validates and renormalizes. Throws ValidationError on empty input,
/// negative or non-finite entries, or a sum outside 1 +/- kNormalizationSlack.
ProbabilityDistribution make_distribution(std::span<const double> raw);

/// Independent product: entries p_i * q_j, i outer, j inner.
ProbabilityDistribution product(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

/// n entries of 1/n. Throws ValidationError for n = 0.
ProbabilityDistribution uniform(std::size_t n);

/// Draw from the flat Dirichlet distribution on the (n-1)-simplex by
/// normalizing n unit exponentials. Every entry is strictly positive.
ProbabilityDistribution sample_flat_simplex(std::size_t n, std::mt19937_64& rng);

/// `count` flat-simplex draws with sizes uniform in [min_n, max_n], from a
/// mt19937_64 seeded with `seed`. Same seed, same corpus.
std::vector<ProbabilityDistribution> random_corpus(std::size_t count, std::size_t min_n,
                                                   std::size_t max_n, std::uint64_t seed);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values) noexcept;

}  // namespace qentropy
