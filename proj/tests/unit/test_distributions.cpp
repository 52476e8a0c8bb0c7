#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "qentropy/distributions.hpp"
#include "qentropy/errors.hpp"

using namespace qentropy;

TEST(MakeDistribution, AcceptsValidInput) {
  const std::vector<double> half{0.5, 0.5};
  auto p = make_distribution(half);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], 0.5);
  EXPECT_EQ(p[1], 0.5);

  const std::vector<double> point{1.0};
  EXPECT_EQ(make_distribution(point)[0], 1.0);
}

TEST(MakeDistribution, Rejections) {
  EXPECT_THROW(make_distribution(std::vector<double>{}), ValidationError);
  EXPECT_THROW(make_distribution(std::vector<double>{0.2, -0.1, 0.9}), ValidationError);
  EXPECT_THROW(make_distribution(std::vector<double>{0.5, std::numeric_limits<double>::infinity()}),
               ValidationError);
  EXPECT_THROW(make_distribution(std::vector<double>{0.5, std::nan("")}), ValidationError);
  EXPECT_THROW(make_distribution(std::vector<double>{0.4, 0.5}), ValidationError);
  EXPECT_THROW(make_distribution(std::vector<double>{0.5, 0.5 + 2e-9}), ValidationError);
}

TEST(MakeDistribution, RenormalizesSmallDrift) {
  auto p = make_distribution(std::vector<double>{0.3, 0.7 + 5e-10});
  EXPECT_NEAR(p[0] + p[1], 1.0, 1e-15);
  EXPECT_LT(p[0], 0.3);
}

TEST(Product, Examples) {
  const auto half = uniform(2);
  const auto q = make_distribution(std::vector<double>{0.2, 0.8});
  EXPECT_EQ(product(uniform(1), q), q);
  EXPECT_EQ(product(half, half), uniform(4));

  const auto p = make_distribution(std::vector<double>{0.3, 0.7});
  const auto pq = product(p, q);
  const std::vector<double> expected{0.06, 0.24, 0.14, 0.56};
  ASSERT_EQ(pq.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(pq[i], expected[i], 1e-15);
  }
}

TEST(Uniform, Examples) {
  EXPECT_THROW(uniform(0), ValidationError);
  EXPECT_EQ(uniform(1)[0], 1.0);
  EXPECT_EQ(uniform(2)[1], 0.5);
  const auto four = uniform(4);
  for (double v : four.probs()) {
    EXPECT_EQ(v, 0.25);
  }
}

TEST(DistributionProperties, ProductSizeAndMass) {
  const auto corpus = random_corpus(200, 1, 12, 99);
  for (std::size_t k = 0; k + 1 < corpus.size(); k += 2) {
    const auto pq = product(corpus[k], corpus[k + 1]);
    EXPECT_EQ(pq.size(), corpus[k].size() * corpus[k + 1].size());
    EXPECT_NEAR(compensated_sum(pq.probs()), 1.0, 1e-12);
  }
}

TEST(DistributionProperties, UniformProductIsUniform) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t m = 1; m <= 12; ++m) {
      const auto pq = product(uniform(n), uniform(m));
      const double target = 1.0 / static_cast<double>(n * m);
      for (double v : pq.probs()) {
        EXPECT_LE(std::abs(v - target), std::nextafter(target, 1.0) - target);
      }
    }
  }
}

TEST(RandomCorpus, ReproducibleAndPositive) {
  const auto a = random_corpus(50, 2, 16, 7);
  const auto b = random_corpus(50, 2, 16, 7);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k], b[k]);
    EXPECT_TRUE(a[k].strictly_positive());
    EXPECT_GE(a[k].size(), 2u);
    EXPECT_LE(a[k].size(), 16u);
    EXPECT_NEAR(compensated_sum(a[k].probs()), 1.0, 1e-12);
  }
  EXPECT_NE(random_corpus(5, 2, 16, 8)[0], a[0]);
}
