#pragma once

// Second derivatives of the normalized mean functions and convexity evidence
// for the 21 mean differences.

#include <optional>
#include <vector>

#include "meanforge/means.hpp"
#include "meanforge/tolerance.hpp"

namespace meanforge {

/// f_M''(x), closed form.
double mean_curvature(MeanKind kind, NormalizedArg x);

/// f_M'(x), closed form.
double mean_slope(MeanKind kind, NormalizedArg x);

/// f_U''(x) - f_V''(x).
double difference_curvature(const DifferencePair& d, NormalizedArg x);

/// f_U'(x) - f_V'(x).
double difference_slope(const DifferencePair& d, NormalizedArg x);

/// Central second difference of f_UV with step h. Requires x - h > 0 and
/// h >= 1e-6 * max(1, x); throws DomainError otherwise.
double finite_difference_curvature(const DifferencePair& d, NormalizedArg x, double step);

/// Evaluation points for convexity certification: log-spaced points on
/// [log_lo, log_hi] plus uniform points on [band_lo, band_hi].
struct CurvatureGrid {
  double log_lo = 1e-4;
  double log_hi = 1e4;
  std::size_t log_points = 10000;
  double band_lo = 0.9;
  double band_hi = 1.1;
  std::size_t band_points = 1000;

  std::vector<double> points() const;
};

enum class Convexity { Convex, NotConvex };

struct ConvexityVerdict {
  DifferencePair pair;
  Convexity verdict;
  /// Grid point of the smallest curvature; present iff NotConvex.
  std::optional<double> witness;
  double min_curvature;
  double min_curvature_at;
};

/// Curvature below this is genuine non-convexity rather than rounding.
inline constexpr double kConvexityThreshold = -1e-12;

/// Throws DomainError when the grid does not cover [1e-4, 1e4] with at least
/// 1e4 log-spaced points.
ConvexityVerdict convexity_certify(const DifferencePair& d, const CurvatureGrid& grid = {});

/// All 21 pairs in pyramid order; the grid curvatures are computed once.
std::vector<ConvexityVerdict> convexity_certify_all(const CurvatureGrid& grid = {});

/// Pairs whose difference is not convex: SR, NH and GH.
bool is_known_nonconvex(const DifferencePair& d) noexcept;

/// 0 <= phi_f(a, b) <= ((b - a) / a) phi_f'(a, b) with phi_f(a, b) = a f(b / a)
/// and f = f_UV. Throws DomainError for the three non-convex pairs.
bool lemma21_bound_check(const DifferencePair& d, const PositivePair& p,
                         const Tolerance& tol = {});

}  // namespace meanforge
