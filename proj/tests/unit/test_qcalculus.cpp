#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qentropy/errors.hpp"
#include "qentropy/qcalculus.hpp"
#include "../support/oracles.hpp"

using qentropy::q_log;
using qentropy::q_log_limit_gap;
using qentropy::QParam;

TEST(QParam, RejectsNonPositive) {
  EXPECT_THROW(QParam(0.0), qentropy::DomainError);
  EXPECT_THROW(QParam(-1.5), qentropy::DomainError);
  EXPECT_THROW(QParam(std::nan("")), qentropy::DomainError);
  EXPECT_TRUE(QParam(1.0).is_classical());
  EXPECT_FALSE(QParam(1.0 + 1e-15).is_classical());
}

TEST(QLog, Examples) {
  EXPECT_EQ(q_log(1.0, QParam(3.7)), 0.0);
  EXPECT_NEAR(q_log(0.5, QParam(2.0)), -1.0, 1e-15);
  EXPECT_NEAR(q_log(0.25, QParam(0.5)), -1.0, 1e-15);
  EXPECT_NEAR(q_log(std::numbers::e, QParam(1.0)), 1.0, 1e-15);
  // long double cross-check of the same two values
  EXPECT_NEAR(q_log(0.5, QParam(2.0)), static_cast<double>(qentropy::oracle::q_log(0.5L, 2.0L)), 1e-15);
  EXPECT_NEAR(q_log(0.25, QParam(0.5)), static_cast<double>(qentropy::oracle::q_log(0.25L, 0.5L)), 1e-15);
}

TEST(QLog, DomainErrors) {
  EXPECT_THROW(q_log(0.0, QParam(2.0)), qentropy::DomainError);
  EXPECT_THROW(q_log(-0.1, QParam(2.0)), qentropy::DomainError);
  EXPECT_THROW(q_log(0.5, QParam(0.0)), qentropy::DomainError);
  EXPECT_THROW(q_log_limit_gap(-1.0, QParam(1.0)), qentropy::DomainError);
}

TEST(QLogLimitGap, Examples) {
  EXPECT_EQ(q_log_limit_gap(0.3, QParam(1.0)), 0.0);
  EXPECT_EQ(q_log_limit_gap(1.0, QParam(2.0)), 0.0);
  // 40-digit reference: |ln_q(0.5) - ln 0.5| at q = 1 + 1e-9 is 2.40226507014604821e-10
  const double gap = q_log_limit_gap(0.5, QParam(1.0 + 1e-9));
  EXPECT_LE(gap, 1e-9);
  EXPECT_NEAR(gap, 2.402265070146048e-10, 1e-15);
}

TEST(QLogProperties, NonPositiveOnUnitInterval) {
  for (double q : {0.1, 0.5, 1.0, 1.5, 2.0, 5.0}) {
    for (int i = 1; i <= 100; ++i) {
      const double x = i / 100.0;
      const double v = q_log(x, QParam(q));
      if (i == 100) {
        EXPECT_EQ(v, 0.0);
      } else {
        EXPECT_LT(v, 0.0) << "x=" << x << " q=" << q;
      }
    }
  }
}

TEST(QLogProperties, StrictlyIncreasing) {
  for (double q : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    double prev = q_log(1e-3, QParam(q));
    for (double x = 2e-3; x < 50.0; x *= 1.1) {
      const double now = q_log(x, QParam(q));
      EXPECT_GT(now, prev) << "x=" << x << " q=" << q;
      prev = now;
    }
  }
}

TEST(QLogProperties, ContinuityAtOne) {
  for (int k = 3; k <= 12; ++k) {
    const double dq = std::pow(10.0, -k);
    for (double q : {1.0 - dq, 1.0 + dq}) {
      for (int i = 0; i <= 990; ++i) {
        const double x = 0.01 + i * 0.001;
        const double lx = std::log(x);
        EXPECT_LE(std::abs(q_log(x, QParam(q)) - q_log(x, QParam(1.0))), 2.0 * dq * lx * lx)
            << "x=" << x << " q=" << q;
      }
    }
  }
}

TEST(QLogProperties, PseudoAdditivity) {
  for (double q : {0.5, 2.0, 3.0}) {
    const QParam qp(q);
    for (double x = 0.05; x <= 1.0; x += 0.05) {
      for (double y = 0.05; y <= 1.0; y += 0.05) {
        const double lx = q_log(x, qp);
        const double ly = q_log(y, qp);
        const double joint = q_log(x * y, qp);
        // |ln_q| reaches ~1e5 here at q = 3, where one ulp exceeds 1e-12
        EXPECT_NEAR(joint, lx + ly + (1.0 - q) * lx * ly, 1e-12 * std::max(1.0, std::abs(joint)));
      }
    }
  }
}
