#pragma once

// Batch kernels over arrays of normalized arguments x = a / b.
//
// Each kernel has a scalar reference implementation and SIMD variants (AVX2 on
// x86-64, NEON on AArch64). All variants perform the same correctly-rounded
// operations in the same order and therefore agree bit for bit; the active
// variant is chosen once at startup from the host CPU.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

namespace meanforge::kernels {

enum class Level { Scalar, Avx2, Neon };

std::string_view level_name(Level level) noexcept;

/// Columns produced by `normalized_means`: the seven means in chain order,
/// then the triangular discrimination and the Hellinger distance, all at (x, 1).
enum Column : std::size_t { kH, kG, kN, kA, kR, kS, kC, kDelta, kHel, kColumnCount };

inline constexpr std::size_t kMeanCount = 7;

enum class Comparison { LessEqual, Equal };

struct KernelTable {
  Level level;
  void (*normalized_means)(const double* x, std::size_t n, double* const* out);
  void (*mean_curvatures)(const double* x, std::size_t n, double* const* out);
  void (*reduced_offsets)(const double* x, std::size_t n, double* const* out);
  // out[i] = constant + sum_k coef[k] * cols[k][i], accumulated in k order.
  void (*linear_combination)(const double* const* cols, const double* coef,
                             std::size_t ncols, double constant, std::size_t n,
                             double* out);
  // excess[i]: (l - r) / (max(|l|, |r|) + abs/rel) for LessEqual, |l - r| / (...)
  // for Equal, so that excess > rel is exactly the tolerance-policy violation.
  // gap[i]: (r - l) / max(|l|, |r|), or 0 when both sides are 0.
  void (*compare)(const double* lhs, const double* rhs, std::size_t n,
                  Comparison cmp, double tol_rel, double tol_abs, double* excess,
                  double* gap);
};

/// Table for `level`, or nullptr when the host cannot run it.
const KernelTable* table(Level level) noexcept;

/// The table used by the library. Defaults to the widest supported level.
const KernelTable& active() noexcept;

/// Switches the active table. Returns false (and changes nothing) when the
/// level is unsupported on this host.
bool set_active(Level level) noexcept;

/// Highest level supported by the host.
Level best_supported() noexcept;

// Span conveniences over the active table.
void normalized_means(std::span<const double> x, const std::array<double*, kColumnCount>& out);
void mean_curvatures(std::span<const double> x, const std::array<double*, kMeanCount>& out);
void reduced_offsets(std::span<const double> x, const std::array<double*, kMeanCount>& out);

}  // namespace meanforge::kernels
