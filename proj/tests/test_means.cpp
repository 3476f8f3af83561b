#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "meanforge/error.hpp"
#include "meanforge/means.hpp"
#include "oracle.hpp"

using namespace meanforge;
using M = MeanKind;

namespace {

std::vector<PositivePair> random_pairs(std::size_t n, std::uint64_t seed, double lo = 1e-6,
                                       double hi = 1e6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<PositivePair> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(std::exp(u(rng)), std::exp(u(rng)));
  return out;
}

}  // namespace

TEST(PositivePair, RejectsInvalidInput) {
  EXPECT_THROW(PositivePair(0.0, 1.0), DomainError);
  EXPECT_THROW(PositivePair(1.0, -2.0), DomainError);
  EXPECT_THROW(PositivePair(NAN, 1.0), DomainError);
  EXPECT_THROW(PositivePair(1.0, INFINITY), DomainError);
  EXPECT_THROW(NormalizedArg(0.0), DomainError);
  EXPECT_NO_THROW(PositivePair(1e-300, 1e300));
}

TEST(MeanKind, ChainOrderIsEnumOrder) {
  for (std::size_t i = 1; i < kAllMeans.size(); ++i) EXPECT_LT(kAllMeans[i - 1], kAllMeans[i]);
  EXPECT_EQ(symbol(M::Heronian), 'N');
  EXPECT_EQ(mean_from_symbol('R'), M::Centroidal);
  EXPECT_FALSE(mean_from_symbol('D').has_value());
}

TEST(DifferencePair, RequiresChainOrder) {
  EXPECT_THROW(DifferencePair(M::Geometric, M::Arithmetic), DomainError);
  EXPECT_THROW(DifferencePair(M::Arithmetic, M::Arithmetic), DomainError);
  EXPECT_EQ(DifferencePair(M::RootMeanSquare, M::Arithmetic).name(), "SA");
  EXPECT_EQ(difference_from_name("CH"), DifferencePair(M::ContraHarmonic, M::Harmonic));
  EXPECT_FALSE(difference_from_name("HC").has_value());
  EXPECT_FALSE(difference_from_name("XY").has_value());
}

TEST(DifferencePair, AllPairsInPyramidOrder) {
  const auto& pairs = all_difference_pairs();
  ASSERT_EQ(pairs.size(), 21u);
  EXPECT_EQ(pairs[0].name(), "GH");
  EXPECT_EQ(pairs[1].name(), "NG");
  EXPECT_EQ(pairs[2].name(), "NH");
  EXPECT_EQ(pairs[3].name(), "AN");
  EXPECT_EQ(pairs[15].name(), "CS");
  EXPECT_EQ(pairs[20].name(), "CH");
}

TEST(Mean, Examples) {
  EXPECT_DOUBLE_EQ(mean(M::Arithmetic, {4, 9}), 6.5);
  EXPECT_DOUBLE_EQ(mean(M::Geometric, {4, 9}), 6.0);
  EXPECT_NEAR(mean(M::Heronian, {1, 4}), 7.0 / 3.0, 1e-15);
  EXPECT_DOUBLE_EQ(mean(M::ContraHarmonic, {1, 3}), 2.5);
  for (M k : kAllMeans) EXPECT_DOUBLE_EQ(mean(k, {3.7, 3.7}), 3.7) << symbol(k);
}

TEST(Mean, FrozenValuesAtOneThree) {
  const PositivePair p(1, 3);
  EXPECT_DOUBLE_EQ(mean(M::Harmonic, p), 1.5);
  EXPECT_DOUBLE_EQ(mean(M::Geometric, p), 1.7320508075688772);
  EXPECT_DOUBLE_EQ(mean(M::Heronian, p), 1.910683602522959);
  EXPECT_DOUBLE_EQ(mean(M::Centroidal, p), 2.1666666666666665);
  EXPECT_DOUBLE_EQ(mean(M::RootMeanSquare, p), 2.23606797749979);
  EXPECT_DOUBLE_EQ(triangular_discrimination(p), 1.0);
  EXPECT_NEAR(hellinger(p), 0.2679491924311227, 1e-16);
}

TEST(Mean, AgreesWithHighPrecisionOracle) {
  for (const PositivePair& p : random_pairs(2000, 1)) {
    for (M k : kAllMeans) {
      EXPECT_LT(oracle::rel_err(mean(k, p), oracle::mean(k, p.a(), p.b())), 4e-16)
          << symbol(k) << " at " << p.a() << ", " << p.b();
    }
  }
}

TEST(Mean, OverflowIsADomainError) {
  EXPECT_THROW(mean(M::ContraHarmonic, {1e300, 1e300}), DomainError);
  EXPECT_THROW(mean(M::RootMeanSquare, {1e200, 1e200}), DomainError);
}

TEST(MeanProperty, Symmetry) {
  for (const PositivePair& p : random_pairs(5000, 2)) {
    const PositivePair q(p.b(), p.a());
    for (M k : kAllMeans) {
      const double x = mean(k, p);
      const double y = mean(k, q);
      EXPECT_LE(std::fabs(x - y), 4 * (std::nextafter(x, INFINITY) - x)) << symbol(k);
    }
  }
}

TEST(MeanProperty, Homogeneity) {
  for (const PositivePair& p : random_pairs(2000, 3, 1e-3, 1e3)) {
    for (double t : {1e-3, 1.0, 1e3}) {
      for (M k : kAllMeans) {
        EXPECT_LT(oracle::rel_err(mean(k, {t * p.a(), t * p.b()}), t * mean(k, p)), 1e-12);
      }
    }
  }
}

TEST(MeanProperty, Internality) {
  for (const PositivePair& p : random_pairs(5000, 4)) {
    for (M k : kAllMeans) {
      const double m = mean(k, p);
      EXPECT_GE(m, std::min(p.a(), p.b()));
      EXPECT_LE(m, std::max(p.a(), p.b()));
    }
  }
}

TEST(MeanProperty, StrictChainAwayFromEquality) {
  for (const PositivePair& p : random_pairs(5000, 5)) {
    if (std::fabs(p.ratio() - 1.0) <= 1e-4) continue;
    for (std::size_t i = 1; i < kAllMeans.size(); ++i) {
      EXPECT_LT(mean(kAllMeans[i - 1], p), mean(kAllMeans[i], p));
    }
  }
}

TEST(Normalized, ExamplesAndConsistency) {
  EXPECT_DOUBLE_EQ(normalized(M::Harmonic, NormalizedArg(1)), 1.0);
  EXPECT_DOUBLE_EQ(normalized(M::Arithmetic, NormalizedArg(3)), 2.0);
  EXPECT_DOUBLE_EQ(normalized(M::RootMeanSquare, NormalizedArg(7)), 5.0);
  for (M k : kAllMeans) EXPECT_DOUBLE_EQ(normalized(k, NormalizedArg(1)), 1.0);
  for (const PositivePair& p : random_pairs(2000, 6)) {
    for (M k : kAllMeans) {
      EXPECT_LT(oracle::rel_err(p.b() * normalized(k, NormalizedArg(p.ratio())), mean(k, p)),
                1e-14);
    }
  }
}

TEST(Difference, Examples) {
  EXPECT_DOUBLE_EQ(difference({M::ContraHarmonic, M::Harmonic}, {1, 3}), 1.0);
  EXPECT_DOUBLE_EQ(difference({M::Arithmetic, M::Geometric}, {4, 9}), 0.5);
  for (const DifferencePair& d : all_difference_pairs()) EXPECT_EQ(difference(d, {2, 2}), 0.0);
  EXPECT_DOUBLE_EQ(triangular_discrimination({4, 1}), 1.8);
  EXPECT_DOUBLE_EQ(triangular_discrimination({5, 5}), 0.0);
  EXPECT_DOUBLE_EQ(hellinger({4, 9}), 0.5);
  EXPECT_DOUBLE_EQ(hellinger({4, 1}), 0.5);
  EXPECT_DOUBLE_EQ(hellinger({5, 5}), 0.0);
}

TEST(Difference, NonnegativeAndZeroOnlyAtEquality) {
  for (const PositivePair& p : random_pairs(3000, 7)) {
    for (const DifferencePair& d : all_difference_pairs()) {
      const double v = difference(d, p);
      EXPECT_GE(v, 0.0);
      if (std::fabs(p.ratio() - 1.0) > 1e-4) {
        EXPECT_GT(v, 0.0) << d.name();
      }
    }
  }
}

TEST(Difference, StableFormMatchesOracleNearEquality) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1e-3, 1e-3);
  for (int i = 0; i < 2000; ++i) {
    const double b = 2.5;
    const double a = b * (1.0 + u(rng));
    for (const DifferencePair& d : all_difference_pairs()) {
      const double want = oracle::difference(d.upper(), d.lower(), a, b);
      EXPECT_LT(oracle::rel_err(stable_difference(d, {a, b}), want), 1e-13) << d.name();
    }
  }
}

TEST(Difference, ReducedOffsetAtOneIsHalfCurvature) {
  // k_M(1) = f_M''(1) / 2.
  EXPECT_DOUBLE_EQ(reduced_offset(M::Harmonic, NormalizedArg(1)), -0.25);
  EXPECT_DOUBLE_EQ(reduced_offset(M::Geometric, NormalizedArg(1)), -0.125);
  EXPECT_DOUBLE_EQ(reduced_offset(M::Arithmetic, NormalizedArg(1)), 0.0);
  EXPECT_DOUBLE_EQ(reduced_offset(M::ContraHarmonic, NormalizedArg(1)), 0.25);
  EXPECT_DOUBLE_EQ(reduced_offset(M::RootMeanSquare, NormalizedArg(1)), 0.125);
}

TEST(Identities, TriangularFamily) {
  for (const PositivePair& p : random_pairs(3000, 9, 1e-3, 1e3)) {
    const double delta = triangular_discrimination(p);
    const double scale = std::max(p.a(), p.b());
    auto D = [&](M u, M v) { return difference({u, v}, p); };
    for (double v : {3 * D(M::ContraHarmonic, M::Centroidal), 2 * D(M::Arithmetic, M::Harmonic),
                     2 * D(M::ContraHarmonic, M::Arithmetic), D(M::ContraHarmonic, M::Harmonic),
                     6 * D(M::Centroidal, M::Arithmetic), 1.5 * D(M::Centroidal, M::Harmonic)}) {
      EXPECT_LE(std::fabs(v - delta), 1e-12 * delta + 1e-14 * scale);
    }
  }
}

TEST(Identities, HellingerFamilyAndCentroidal) {
  for (const PositivePair& p : random_pairs(3000, 10, 1e-3, 1e3)) {
    const double h = hellinger(p);
    const double scale = std::max(p.a(), p.b());
    auto D = [&](M u, M v) { return difference({u, v}, p); };
    for (double v : {3 * D(M::Arithmetic, M::Heronian), D(M::Arithmetic, M::Geometric),
                     1.5 * D(M::Heronian, M::Geometric)}) {
      EXPECT_LE(std::fabs(v - h), 1e-12 * h + 1e-14 * scale);
    }
    const double cg = D(M::ContraHarmonic, M::Geometric);
    EXPECT_LE(std::fabs(cg - 3 * D(M::Centroidal, M::Heronian)), 1e-12 * cg + 1e-14 * scale);
  }
}
