#include "meanforge/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "meanforge/error.hpp"

namespace meanforge {

void SampleStrategy::validate() const {
  if (count == 0) throw DomainError("sample count must be positive");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo > 0.0 && lo <= hi)) {
    throw DomainError("sample range needs finite 0 < lo <= hi");
  }
  if (!(near_one_fraction >= 0.0 && near_one_fraction <= 1.0)) {
    throw DomainError("near-one fraction must lie in [0, 1]");
  }
}

std::size_t block_count(const SampleStrategy& s) noexcept {
  return (s.count + kBlockSize - 1) / kBlockSize;
}

void fill_block(const SampleStrategy& s, std::size_t block, std::span<double> out) {
  std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  // 53-bit uniform in [0, 1); std::uniform_real_distribution is not pinned
  // down across standard libraries.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double l0 = std::log(s.lo);
  const double l1 = std::log(s.hi);
  for (double& x : out) {
    const double u1 = unit();
    const double u2 = unit();
    if (u1 < s.near_one_fraction) {
      x = (1.0 - 1e-3) + 2e-3 * u2;
    } else if (s.lo == s.hi) {
      x = s.lo;
    } else {
      x = std::clamp(std::exp(l0 + u2 * (l1 - l0)), s.lo, s.hi);
    }
  }
}

std::size_t worker_count(std::size_t blocks) noexcept {
  std::size_t n = 0;
  if (const char* env = std::getenv("MEANFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<std::size_t>(v);
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, blocks));
}

}  // namespace meanforge
