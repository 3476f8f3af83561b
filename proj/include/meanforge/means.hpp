#pragma once

// The seven two-argument means, the Gini two-parameter family, and the
// differences and divergences built from them.
//
// Every mean here is symmetric and homogeneous of degree one, so
// M(a, b) = b * f_M(a / b). The normalized functions f_M are what the
// curvature, ratio and sampling layers work with.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace meanforge {

/// An input point (a, b) with both coordinates finite and strictly positive.
class PositivePair {
 public:
  PositivePair(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  /// a / b.
  double ratio() const noexcept { return a_ / b_; }

  friend bool operator==(const PositivePair&, const PositivePair&) = default;

 private:
  double a_;
  double b_;
};

/// The argument x = a / b of a normalized function; finite and positive.
class NormalizedArg {
 public:
  explicit NormalizedArg(double x);

  double value() const noexcept { return x_; }
  operator double() const noexcept { return x_; }

 private:
  double x_;
};

/// Enumerators are declared in chain order, so the built-in comparison on
/// MeanKind is the ordering H < G < N < A < R < S < C.
enum class MeanKind : std::uint8_t {
  Harmonic,
  Geometric,
  Heronian,
  Arithmetic,
  Centroidal,
  RootMeanSquare,
  ContraHarmonic,
};

inline constexpr std::array<MeanKind, 7> kAllMeans = {
    MeanKind::Harmonic,   MeanKind::Geometric,      MeanKind::Heronian,
    MeanKind::Arithmetic, MeanKind::Centroidal,     MeanKind::RootMeanSquare,
    MeanKind::ContraHarmonic,
};

inline constexpr std::size_t index_of(MeanKind kind) noexcept {
  return static_cast<std::size_t>(kind);
}

/// One-letter symbol: H, G, N, A, R, S or C.
char symbol(MeanKind kind) noexcept;
std::string_view name(MeanKind kind) noexcept;
std::optional<MeanKind> mean_from_symbol(char c) noexcept;

/// Orders (r, s) of a Gini mean. E_{r,s} = E_{s,r}.
struct GiniOrder {
  GiniOrder(double r, double s);

  double r;
  double s;
};

/// D_UV = U - V for U strictly above V in the chain.
class DifferencePair {
 public:
  DifferencePair(MeanKind upper, MeanKind lower);

  MeanKind upper() const noexcept { return upper_; }
  MeanKind lower() const noexcept { return lower_; }
  /// Two-letter name such as "SA".
  std::string name() const;

  friend bool operator==(const DifferencePair&, const DifferencePair&) = default;

 private:
  MeanKind upper_;
  MeanKind lower_;
};

/// All 21 difference pairs in pyramid order: GH; NG NH; AN AG AH; ...; CS ... CH.
const std::array<DifferencePair, 21>& all_difference_pairs();

/// Parses a two-letter name such as "SA". Returns nothing for unknown letters
/// or a pair that is not chain ordered.
std::optional<DifferencePair> difference_from_name(std::string_view name);

// Throws DomainError when an intermediate overflows or underflows so that the
// result is not a finite positive number.
double mean(MeanKind kind, const PositivePair& p);

double gini_mean(const GiniOrder& order, const PositivePair& p);

/// f_M(x) with M(a, b) = b * f_M(a / b).
double normalized(MeanKind kind, NormalizedArg x);

/// mean(upper, p) - mean(lower, p).
double difference(const DifferencePair& d, const PositivePair& p);

/// (a - b)^2 / (a + b).
double triangular_discrimination(const PositivePair& p);

/// (sqrt(a) - sqrt(b))^2 / 2.
double hellinger(const PositivePair& p);

/// k_M(x) = (f_M(x) - f_A(x)) / (x - 1)^2, evaluated without cancellation.
/// Each is a smooth bounded function with k_M(1) = f_M''(1) / 2.
double reduced_offset(MeanKind kind, NormalizedArg x);

/// k_U(x) - k_V(x) = f_UV(x) / (x - 1)^2. Positive on (0, inf) for every pair.
double reduced_difference(const DifferencePair& d, NormalizedArg x);

/// D_UV(a, b) computed as (a - b)^2 / b * k_UV(a / b). Agrees with
/// `difference` but keeps full relative accuracy when a is close to b.
double stable_difference(const DifferencePair& d, const PositivePair& p);

}  // namespace meanforge
