#pragma once

// Sampling-based verification of relations between means.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "meanforge/dsl.hpp"
#include "meanforge/means.hpp"
#include "meanforge/sampling.hpp"
#include "meanforge/tolerance.hpp"

namespace meanforge {

enum class VerdictKind {
  Check,        // pass/fail
  Descriptive,  // evaluated and summarized, never fails
};

struct Verdict {
  std::string suite;
  std::string relation;
  VerdictKind kind = VerdictKind::Check;
  bool holds = true;
  /// Largest relative excess: (lhs - rhs) / (max(|lhs|, |rhs|) + abs / rel) for
  /// "<=", |lhs - rhs| / (...) for "==". A link is violated when this exceeds
  /// its relative tolerance.
  double worst_violation = 0.0;
  /// Present iff the relation fails.
  std::optional<PositivePair> witness;
  /// x where the sides of an inequality are relatively closest.
  std::optional<double> tight_at;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string note;
};

/// Evaluates every link of `rel` at each sample x (with b = 1), then repeats
/// a subset of samples at b = 1e-3 and b = 1e3 as a homogeneity spot check.
/// Bit-identical for a given strategy regardless of worker count or kernel
/// level. Throws DomainError, naming the sample, if a side is not finite.
Verdict verify_relation(const Relation& rel, const SampleStrategy& strategy,
                        const Tolerance& tol = {});

/// Same as calling verify_relation for each, sharing the sampled columns.
std::vector<Verdict> verify_relations(const std::vector<Relation>& rels,
                                      const SampleStrategy& strategy, const Tolerance& tol = {});

/// Summary of how the two sides of each link compare; `holds` is meaningless.
Verdict describe_relation(const Relation& rel, const SampleStrategy& strategy,
                          const Tolerance& tol = {});

struct Counterexample {
  PositivePair witness;
  double violation;
};

/// Sampling followed by 50 interval-halving steps in ln x around the worst
/// sample. Returns nothing when no violation survives.
std::optional<Counterexample> counterexample_search(const Relation& rel,
                                                    const SampleStrategy& strategy,
                                                    const Tolerance& tol = {});

/// W1 = Delta/4, W2 = 3/7 D_CN, W3 = 1/3 D_CG, W4 = 3/5 D_RG, W5 = hel.
struct Eq33Values {
  /// Weighted differences c_ij (W_i - W_j) in pyramid order:
  /// 21 32 31 43 42 41 54 53 52 51.
  std::array<double, 10> values;
  /// (max - min) / max(|max|, 1e-4 * max_i W_i).
  double spread;
  /// Mean of `values` over (sqrt(a) - sqrt(b))^4 / (a + b); absent where the
  /// common value is below the resolution floor (in particular at a = b).
  std::optional<double> ratio_to_quartic;
};

Eq33Values eq33_common_value(const PositivePair& p);

/// Weights c_ij in the order of Eq33Values::values.
const std::array<Rational, 10>& eq33_weights();

}  // namespace meanforge
