#pragma once

namespace meanforge {

/// Violation policy for "lhs <= rhs": lhs - rhs > rel * max(|lhs|, |rhs|) + abs.
/// Equalities use |lhs - rhs| > eq_rel * max(|lhs|, |rhs|) + abs. The absolute
/// floor is needed because both sides of most relations vanish at a = b.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-14;
  double eq_rel = 1e-12;

  bool le_violated(double lhs, double rhs) const noexcept;
  bool eq_violated(double lhs, double rhs) const noexcept;
  /// Same tolerance for a relation evaluated at (x * b, b): the absolute floor
  /// is scaled with b, since every relation here is homogeneous of degree one.
  Tolerance scaled(double b) const noexcept { return {rel, abs * b, eq_rel}; }
};

}  // namespace meanforge
