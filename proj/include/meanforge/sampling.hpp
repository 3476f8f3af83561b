#pragma once

// Seeded, block-structured sampling of x = a / b.

#include <cstddef>
#include <cstdint>
#include <span>

namespace meanforge {

struct SampleStrategy {
  std::size_t count = 1'000'000;
  double lo = 1e-6;
  double hi = 1e6;
  std::uint64_t seed = 42;
  /// Share of samples drawn uniformly from [1 - 1e-3, 1 + 1e-3].
  double near_one_fraction = 0.2;

  /// Throws DomainError unless count > 0, 0 < lo <= hi (finite) and the
  /// fraction lies in [0, 1].
  void validate() const;
};

inline constexpr std::size_t kBlockSize = 4096;

std::size_t block_count(const SampleStrategy& s) noexcept;

/// Samples of block `block` (its length is kBlockSize except for the last).
/// Each block has its own generator seeded from (seed, block), so any block
/// can be produced independently of the others.
void fill_block(const SampleStrategy& s, std::size_t block, std::span<double> out);

/// Worker count: MEANFORGE_THREADS if set and positive, otherwise the
/// hardware concurrency; never more than `blocks`.
std::size_t worker_count(std::size_t blocks) noexcept;

}  // namespace meanforge
