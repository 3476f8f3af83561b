#pragma once

// Ratio bounds between mean differences: D_num <= beta * D_den with the
// smallest such beta, and the auxiliary functions used to establish them.

#include <optional>
#include <string_view>
#include <vector>

#include "meanforge/means.hpp"
#include "meanforge/rational.hpp"
#include "meanforge/tolerance.hpp"

namespace meanforge {

/// D_num against D_den. The denominator must be a convex difference (its
/// curvature is positive on (0, inf)); the constructor rejects SR, NH and GH.
class RatioSpec {
 public:
  RatioSpec(DifferencePair numerator, DifferencePair denominator);

  const DifferencePair& numerator() const noexcept { return num_; }
  const DifferencePair& denominator() const noexcept { return den_; }
  /// "SA/SN".
  std::string name() const;

  friend bool operator==(const RatioSpec&, const RatioSpec&) = default;

 private:
  DifferencePair num_;
  DifferencePair den_;
};

/// g(x) = f_num''(x) / f_den''(x). Throws DomainError if the denominator
/// curvature is not above 1e-300 or the ratio is not finite.
double ratio(const RatioSpec& spec, NormalizedArg x);

/// q(x) = f_num(x) / f_den(x) = D_num(a, b) / D_den(a, b) at a / b = x,
/// through the reduced forms, so q(1) = g(1) is evaluated directly.
double difference_ratio(const RatioSpec& spec, NormalizedArg x);

/// Log-spaced probe points on [lo, hi].
struct ProbeGrid {
  double lo = 1e-6;
  double hi = 1e6;
  std::size_t points = 10000;
};

struct RatioMaximum {
  double value;
  double argmax;
  /// The grid's discrete derivative changes sign exactly once (+ to -).
  bool unimodal;
};

struct SharpConstant {
  RatioSpec spec;
  /// sup q: the smallest beta with D_num <= beta * D_den everywhere.
  double beta;
  double argmax;
  bool unimodal;
  /// sup g. At least beta; equal to it when the curvature-ratio argument is sharp.
  RatioMaximum curvature_sup;
};

SharpConstant sharp_constant(const RatioSpec& spec, const ProbeGrid& grid = {});

/// Grid values of q (or g with `curvature` set), one per probe point.
std::vector<double> ratio_profile(const RatioSpec& spec, bool curvature,
                                  const ProbeGrid& grid = {});

/// Number of sign changes in the discrete derivative of `values`, ignoring
/// steps within 64 ulps of the largest magnitude.
std::size_t slope_sign_changes(const std::vector<double>& values);

struct RatioBound {
  RatioSpec spec;
  Rational constant;
};

/// The thirteen ratio bounds, numerator chain order as they appear in the
/// refinement D_SA <= ... <= 3 D_AN.
const std::vector<RatioBound>& theorem31_constants();

std::optional<Rational> theorem31_lookup(const RatioSpec& spec);

/// alpha * D_den <= D_num <= beta * D_den at p under `tol`. Requires
/// 0 <= alpha < beta.
bool lemma31_sandwich_check(const RatioSpec& spec, double alpha, double beta,
                            const PositivePair& p, const Tolerance& tol = {});

enum class Auxiliary { V1, V2, V3a, V3b, H2, H3, Quartic };

inline constexpr Auxiliary kAllAuxiliaries[] = {
    Auxiliary::V1, Auxiliary::V2, Auxiliary::V3a, Auxiliary::V3b,
    Auxiliary::H2, Auxiliary::H3, Auxiliary::Quartic,
};

std::string_view auxiliary_name(Auxiliary aux) noexcept;
std::optional<Auxiliary> auxiliary_from_name(std::string_view name) noexcept;

struct AuxiliaryValue {
  double value;
  /// |direct - alternative form|; see auxiliary_check.
  double residual;
};

// Direct value plus the residual against a second closed form:
//   v1   8 [S^5 - x^(5/2)]            with S = sqrt((x^2 + 1) / 2)
//   v3a  32 [S^5 - A^5]               with A = (x + 1) / 2
//   v2   h2 factored / (P + Q)        where v2 = P - Q and h2 = P^2 - Q^2
//   v3b  h3 factored / (P + Q)        likewise
//   h2, h3  their (sqrt(x) - 1)^4 factorizations
//   quartic  [4(x^2+x+1)]^2 - [sqrt(x)(x+1)]^2 against 16x^4+31x^3+46x^2+31x+16
AuxiliaryValue auxiliary_check(Auxiliary aux, NormalizedArg x);

}  // namespace meanforge
