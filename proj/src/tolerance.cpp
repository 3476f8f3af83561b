#include "meanforge/tolerance.hpp"

#include <algorithm>
#include <cmath>

namespace meanforge {

bool Tolerance::le_violated(double lhs, double rhs) const noexcept {
  const double m = std::max(std::fabs(lhs), std::fabs(rhs));
  return lhs - rhs > rel * m + abs;
}

bool Tolerance::eq_violated(double lhs, double rhs) const noexcept {
  const double m = std::max(std::fabs(lhs), std::fabs(rhs));
  return std::fabs(lhs - rhs) > eq_rel * m + abs;
}

}  // namespace meanforge
