#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fdmac/analytic.hpp"
#include "test_support.hpp"

namespace fdmac {
namespace {

constexpr double kTight = 1e-12;

bool has_kind(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

TEST(Validate, EqualThirdsIsValid) {
  EXPECT_TRUE(validate({1, 1, 1.0 / 3, 1.0 / 3, 1.0 / 3}).empty());
}

TEST(Validate, ProbabilitySumViolation) {
  auto vs = validate({1, 1, 0.5, 0.5, 0.5});
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].kind, ViolationKind::probability_sum);
  EXPECT_NE(vs[0].message.find("1.5"), std::string::npos) << vs[0].message;
}

TEST(Validate, UnusedFdProbability) {
  auto vs = validate({0, 2, 0.5, 0.1, 0.25});
  EXPECT_TRUE(has_kind(vs, ViolationKind::unused_fd_probability));
  EXPECT_FALSE(has_kind(vs, ViolationKind::probability_sum));
}

TEST(Validate, UnusedHdProbability) {
  EXPECT_TRUE(has_kind(validate({3, 0, 0.25, 0.25, 0.1}), ViolationKind::unused_hd_probability));
}

TEST(Validate, EmptyAndNegativeNetworks) {
  EXPECT_TRUE(has_kind(validate({0, 0, 1.0, 0.0, 0.0}), ViolationKind::empty_network));
  EXPECT_TRUE(has_kind(validate({-1, 2, 0.5, 0.0, 0.25}), ViolationKind::negative_count));
}

TEST(Validate, ProbabilityOutOfRangeAndNan) {
  EXPECT_TRUE(has_kind(validate({1, 1, 1.5, -0.25, -0.25}), ViolationKind::probability_range));
  auto vs = validate({1, 1, std::nan(""), 0.5, 0.5});
  EXPECT_TRUE(has_kind(vs, ViolationKind::probability_range));
  EXPECT_FALSE(has_kind(vs, ViolationKind::probability_sum));
}

TEST(Validate, SumToleranceIsOneE9) {
  EXPECT_TRUE(validate({1, 1, 0.5 + 5e-10, 0.25, 0.25}).empty());
  EXPECT_FALSE(validate({1, 1, 0.5 + 5e-9, 0.25, 0.25}).empty());
}

TEST(HeadFraction, DcaIsOne) { EXPECT_EQ(head_fraction(dca_config(2, 2)), 1.0); }

TEST(HeadFraction, AllFdIsZero) { EXPECT_EQ(head_fraction({3, 0, 0.25, 0.25, 0.0}), 0.0); }

TEST(HeadFraction, AllHdIsOne) { EXPECT_EQ(head_fraction({0, 4, 0.2, 0.0, 0.2}), 1.0); }

TEST(HeadFraction, BalancedCaseMatchesBisectionOracle) {
  const NetworkConfig c{1, 1, 0.6, 0.3, 0.1};
  // Frozen from the bisection oracle: 0.6p = 0.3 + 0.6(1-p)  =>  p = 0.75.
  EXPECT_NEAR(testing::head_fraction_by_bisection(c), 0.75, kTight);
  EXPECT_NEAR(head_fraction(c), 0.75, kTight);
}

TEST(HeadFraction, FairnessBoundaryIsExactlyOne) {
  const NetworkConfig c{2, 3, 3.0 / 8, 1.0 / 8, 1.0 / 8};
  // n/(n+m) * (p_A + m p_F)/p_A with p_F = p_A/n reduces to 1.
  const double arg = 3.0 / 5.0 * (3.0 / 8 + 2.0 / 8) / (3.0 / 8);
  EXPECT_NEAR(arg, 1.0, kTight);
  EXPECT_NEAR(head_fraction(c), 1.0, kTight);
}

TEST(HeadFraction, ZeroApAccessUsesConvention) {
  EXPECT_EQ(head_fraction({2, 2, 0.0, 0.25, 0.25}), 0.0);
  const auto r = throughputs({2, 2, 0.0, 0.25, 0.25});
  EXPECT_EQ(r.hd_down, 0.0);
  EXPECT_EQ(r.fd_down, 0.25);
  EXPECT_NEAR(r.sum, 1.5, kTight);
}

TEST(HeadFraction, InvalidConfigThrows) {
  EXPECT_THROW(head_fraction({1, 1, 0.5, 0.5, 0.5}), InvalidConfig);
  try {
    throughputs({0, 2, 0.5, 0.1, 0.25});
    FAIL();
  } catch (const InvalidConfig& e) {
    EXPECT_EQ(e.violations().front().kind, ViolationKind::unused_fd_probability);
  }
}

TEST(Throughputs, AllHalfDuplex) {
  const auto r = throughputs({0, 4, 0.2, 0.0, 0.2});
  EXPECT_EQ(r.head_fraction, 1.0);
  EXPECT_NEAR(r.hd_down, 0.05, kTight);
  EXPECT_NEAR(r.hd_up, 0.2, kTight);
  EXPECT_EQ(r.fd_down, 0.0);
  EXPECT_EQ(r.sum, 1.0);
}

TEST(Throughputs, AllFullDuplex) {
  const auto r = throughputs({3, 0, 0.25, 0.25, 0.0});
  EXPECT_EQ(r.head_fraction, 0.0);
  EXPECT_NEAR(r.fd_down, 1.0 / 3, kTight);
  EXPECT_EQ(r.fd_up, r.fd_down);
  EXPECT_EQ(r.hd_down, 0.0);
  EXPECT_NEAR(r.sum, 2.0, kTight);
}

TEST(Throughputs, EqualThirds) {
  const auto r = throughputs({1, 1, 1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_EQ(r.head_fraction, 1.0);
  EXPECT_NEAR(r.hd_down, 1.0 / 3, kTight);
  EXPECT_NEAR(r.hd_up, 1.0 / 3, kTight);
  EXPECT_NEAR(r.fd_down, 1.0 / 3, kTight);
  EXPECT_NEAR(r.sum, 4.0 / 3, kTight);
}

TEST(Throughputs, BalancedCase) {
  const auto r = throughputs({1, 1, 0.6, 0.3, 0.1});
  EXPECT_NEAR(r.head_fraction, 0.75, kTight);
  EXPECT_NEAR(r.hd_down, 0.45, kTight);
  EXPECT_NEAR(r.hd_up, 0.1, kTight);
  EXPECT_NEAR(r.fd_down, 0.45, kTight);
  EXPECT_NEAR(r.fd_up, 0.45, kTight);
  EXPECT_NEAR(r.sum, 1.45, kTight);
  EXPECT_NEAR(r.hd_down + r.hd_up + r.fd_down + r.fd_up, r.sum, kTight);
}

TEST(Presets, Dca) {
  const auto c = dca_config(2, 2);
  EXPECT_DOUBLE_EQ(c.p_ap, 0.2);
  EXPECT_DOUBLE_EQ(c.p_fd, 0.2);
  EXPECT_DOUBLE_EQ(c.p_hd, 0.2);

  const auto single = dca_config(0, 1);
  EXPECT_DOUBLE_EQ(single.p_ap, 0.5);
  EXPECT_DOUBLE_EQ(single.p_hd, 0.5);
  EXPECT_EQ(single.p_fd, 0.0);

  const auto forty = dca_config(4, 36);
  EXPECT_DOUBLE_EQ(forty.p_ap, 1.0 / 41);
  EXPECT_DOUBLE_EQ(forty.p_fd, 1.0 / 41);
  EXPECT_DOUBLE_EQ(forty.p_hd, 1.0 / 41);

  EXPECT_THROW(dca_config(0, 0), EmptyNetwork);
}

TEST(Presets, Fairness) {
  const auto c = fairness_config(2, 2);
  EXPECT_DOUBLE_EQ(c.p_ap, 1.0 / 3);
  EXPECT_DOUBLE_EQ(c.p_fd, 1.0 / 6);
  EXPECT_DOUBLE_EQ(c.p_hd, 1.0 / 6);

  const auto hd_only = fairness_config(0, 5);
  EXPECT_DOUBLE_EQ(hd_only.p_ap, 0.5);
  EXPECT_DOUBLE_EQ(hd_only.p_hd, 0.1);
  EXPECT_EQ(hd_only.p_fd, 0.0);

  const auto fd_only = fairness_config(3, 0);
  EXPECT_DOUBLE_EQ(fd_only.p_fd, 1.0 / 3);
  EXPECT_EQ(fd_only.p_ap, 0.0);
  EXPECT_EQ(fd_only.p_hd, 0.0);

  EXPECT_THROW(fairness_config(0, 0), EmptyNetwork);
}

TEST(Presets, DcaGain) {
  EXPECT_NEAR(dca_gain(1, 1), 4.0 / 3, kTight);
  EXPECT_NEAR(dca_gain(2, 2), 1.4, kTight);
  EXPECT_NEAR(dca_gain(4, 4), 13.0 / 9, kTight);
  EXPECT_THROW(dca_gain(0, 0), EmptyNetwork);
  // The closed form assumes the AP's head packet is always for an HD station,
  // which holds whenever HD stations exist.
  for (int m = 0; m <= 10; ++m) {
    for (int n = 1; n <= 10; ++n) {
      EXPECT_NEAR(dca_gain(m, n), throughputs(dca_config(m, n)).sum, kTight);
    }
  }
  // All-FD: every slot is full duplex, so the realised sum is 2, above the formula.
  for (int m = 1; m <= 10; ++m) {
    EXPECT_NEAR(throughputs(dca_config(m, 0)).sum, 2.0, kTight);
    EXPECT_NEAR(dca_gain(m, 0), 1.0 + m / (1.0 + m), kTight);
  }
}

TEST(Properties, PresetsCloseProbabilities) {
  for (int m = 0; m <= 50; ++m) {
    for (int n = 0; n <= 50; ++n) {
      if (m + n == 0) continue;
      EXPECT_TRUE(validate(dca_config(m, n)).empty()) << m << "," << n;
      EXPECT_TRUE(validate(fairness_config(m, n)).empty()) << m << "," << n;
    }
  }
}

TEST(Properties, FairnessEqualizesEveryFlow) {
  for (int m = 0; m <= 30; ++m) {
    for (int n = 1; n <= 30; ++n) {
      const auto r = throughputs(fairness_config(m, n));
      const double target = 1.0 / (2 * n + m);
      EXPECT_NEAR(r.hd_down, target, kTight);
      EXPECT_NEAR(r.hd_up, target, kTight);
      if (m > 0) {
        EXPECT_NEAR(r.fd_down, target, kTight);
        EXPECT_NEAR(r.fd_up, target, kTight);
      }
    }
  }
}

TEST(Properties, DcaSumIncreasesAndFairnessCostsThroughput) {
  for (int total : {1, 5, 40}) {
    double prev_dca = 0.0, prev_fair = 0.0;
    for (int m = 0; m <= total; ++m) {
      const double dca = throughputs(dca_config(m, total - m)).sum;
      const double fair = throughputs(fairness_config(m, total - m)).sum;
      if (m > 0) {
        EXPECT_GT(dca, prev_dca);
        EXPECT_GE(fair, prev_fair - kTight);
      }
      EXPECT_LE(fair, dca + kTight);
      prev_dca = dca;
      prev_fair = fair;
    }
  }
}

class RandomConfigs : public ::testing::Test {
 protected:
  std::mt19937_64 gen{20261017};
};

TEST_F(RandomConfigs, ReportInvariants) {
  for (int i = 0; i < 2000; ++i) {
    const auto c = testing::random_config(gen, 0, 8);
    const auto r = throughputs(c);
    EXPECT_EQ(r.fd_down, r.fd_up);
    EXPECT_NEAR(r.sum, c.hd_count * (r.hd_down + r.hd_up) + c.fd_count * (r.fd_down + r.fd_up),
                kTight);
    EXPECT_GE(r.sum, 1.0 - kTight);
    EXPECT_LE(r.sum, 2.0 + kTight);
    for (double v : {r.head_fraction, r.hd_down, r.hd_up, r.fd_down, r.fd_up}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST_F(RandomConfigs, HeadFractionAgreesWithBisection) {
  for (int i = 0; i < 2000; ++i) {
    const auto c = testing::random_config(gen, 1, 8);
    EXPECT_NEAR(head_fraction(c), testing::head_fraction_by_bisection(c), 1e-12);
  }
}

TEST_F(RandomConfigs, SaturationRegime) {
  for (int i = 0; i < 2000; ++i) {
    const auto c = testing::random_config(gen, 1, 8);
    if (c.p_fd >= c.p_ap / c.hd_count) EXPECT_EQ(head_fraction(c), 1.0);
  }
}

TEST_F(RandomConfigs, CornerCasesAreExact) {
  for (int i = 0; i < 500; ++i) {
    auto c = testing::random_config(gen, 1, 8);
    auto hd_only = c;
    hd_only.fd_count = 0;
    hd_only.p_fd = 0.0;
    hd_only.p_ap = 1.0 - hd_only.hd_count * hd_only.p_hd;
    EXPECT_EQ(throughputs(hd_only).sum, 1.0);

    auto fd_only = c;
    fd_only.hd_count = 0;
    fd_only.p_hd = 0.0;
    fd_only.p_ap = 1.0 - fd_only.fd_count * fd_only.p_fd;
    EXPECT_NEAR(throughputs(fd_only).sum, 2.0, kTight);
  }
}

}  // namespace
}  // namespace fdmac
