#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "meanforge/error.hpp"
#include "meanforge/means.hpp"
#include "oracle.hpp"

using namespace meanforge;
using M = MeanKind;

namespace {

struct Probe {
  double r, s, a, b;
};

std::vector<Probe> probes(std::size_t n, std::uint64_t seed, double order_bound) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> order(-order_bound, order_bound);
  std::uniform_real_distribution<double> logx(std::log(1e-6), std::log(1e6));
  std::vector<Probe> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({order(rng), order(rng), std::exp(logx(rng)), std::exp(logx(rng))});
  }
  return out;
}

}  // namespace

TEST(Gini, Examples) {
  EXPECT_NEAR(gini_mean({0, 1}, {4, 9}), 6.5, 1e-14);
  EXPECT_DOUBLE_EQ(gini_mean({0, 0}, {4, 9}), 6.0);
  EXPECT_NEAR(gini_mean({-1, 0}, {1, 3}), 1.5, 1e-14);
  EXPECT_NEAR(gini_mean({2, 2}, {3.25, 3.25}), 3.25, 1e-15);
  EXPECT_NEAR(gini_mean({0, 2}, {1, 7}), 5.0, 1e-14);
}

TEST(Gini, SpecialCasesMatchNamedMeans) {
  struct Case {
    double r, s;
    M kind;
  };
  const Case cases[] = {{-1, 0, M::Harmonic},
                        {-0.5, 0.5, M::Geometric},
                        {0, 1, M::Arithmetic},
                        {0, 2, M::RootMeanSquare},
                        {1, 2, M::ContraHarmonic}};
  for (const Probe& p : probes(2000, 11, 1.0)) {
    for (const Case& c : cases) {
      const PositivePair ab(p.a, p.b);
      EXPECT_LT(oracle::rel_err(gini_mean({c.r, c.s}, ab), mean(c.kind, ab)), 1e-10)
          << c.r << "," << c.s << " at " << p.a << "," << p.b;
    }
  }
}

TEST(Gini, AgreesWithDefinitionInHighPrecision) {
  for (const Probe& p : probes(1500, 12, 64.0)) {
    const double got = gini_mean({p.r, p.s}, {p.a, p.b});
    EXPECT_LT(oracle::rel_err(got, oracle::gini(p.r, p.s, p.a, p.b)), 1e-11)
        << p.r << "," << p.s << " at " << p.a << "," << p.b;
  }
}

TEST(Gini, EqualOrderBranchAgreesWithDefinition) {
  for (const Probe& p : probes(500, 13, 64.0)) {
    const double got = gini_mean({p.r, p.r}, {p.a, p.b});
    EXPECT_LT(oracle::rel_err(got, oracle::gini(p.r, p.r, p.a, p.b)), 1e-11);
  }
}

TEST(Gini, ContinuousAcrossTheEqualOrderThreshold) {
  const PositivePair ab(0.37, 41.0);
  const double at = gini_mean({1.5, 1.5}, ab);
  for (double gap : {5e-10, 9.9e-10, 1.01e-9, 3e-9, 1e-7}) {
    EXPECT_LT(oracle::rel_err(gini_mean({1.5 + gap, 1.5}, ab), at), 20 * gap + 1e-13) << gap;
  }
}

TEST(GiniProperty, SymmetricInArgumentsAndOrders) {
  for (const Probe& p : probes(2000, 14, 64.0)) {
    const double base = gini_mean({p.r, p.s}, {p.a, p.b});
    EXPECT_LT(oracle::rel_err(gini_mean({p.s, p.r}, {p.a, p.b}), base), 1e-14);
    EXPECT_LT(oracle::rel_err(gini_mean({p.r, p.s}, {p.b, p.a}), base), 1e-13);
  }
}

TEST(GiniProperty, IncreasingInEachOrder) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> order(-64, 64);
  std::uniform_real_distribution<double> logx(std::log(1e-6), std::log(1e6));
  for (int i = 0; i < 1000; ++i) {
    double r1 = order(rng);
    double r2 = order(rng);
    if (r1 > r2) std::swap(r1, r2);
    const double s = order(rng);
    const PositivePair p(std::exp(logx(rng)), std::exp(logx(rng)));
    const double lo = gini_mean({r1, s}, p);
    const double hi = gini_mean({r2, s}, p);
    EXPECT_LE(lo, hi * (1 + 1e-12)) << r1 << " < " << r2 << ", s = " << s;
  }
}

TEST(GiniProperty, NoOverflowForLargeOrders) {
  for (double r : {-64.0, -63.5, -1.0, 0.0, 1.0, 63.5, 64.0}) {
    for (double s : {-64.0, -32.0, 0.0, 32.0, 64.0}) {
      for (const auto& [a, b] : {std::pair{1e-6, 1e6}, std::pair{1e6, 1e6}, std::pair{1e-6, 1e-6},
                                 std::pair{1e6, 0.5}, std::pair{1e-6, 2.0}}) {
        const double v = gini_mean({r, s}, {a, b});
        ASSERT_TRUE(std::isfinite(v)) << r << "," << s << " at " << a << "," << b;
        EXPECT_GE(v, std::min(a, b) * (1 - 1e-13));
        EXPECT_LE(v, std::max(a, b) * (1 + 1e-13));
      }
    }
  }
}

TEST(Gini, RejectsNonFiniteOrders) {
  EXPECT_THROW(GiniOrder(NAN, 1), DomainError);
  EXPECT_THROW(GiniOrder(0, INFINITY), DomainError);
}
