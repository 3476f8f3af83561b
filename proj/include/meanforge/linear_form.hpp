#pragma once

// A relation side compiled to exact coefficients over the kernel columns
// (H..C, Delta, hel) plus any Gini atoms, ready for batch evaluation.

#include <array>
#include <vector>

#include "meanforge/dsl.hpp"
#include "meanforge/kernels.hpp"
#include "meanforge/rational.hpp"

namespace meanforge {

struct GiniTerm {
  Rational r;  // r >= s
  Rational s;
  Rational coef;

  friend bool operator==(const GiniTerm&, const GiniTerm&) = default;
};

struct LinearForm {
  std::array<Rational, kernels::kColumnCount> coef{};
  Rational constant;
  /// Sorted by (r, s), no zero coefficients, no repeated orders.
  std::vector<GiniTerm> gini;

  /// D(U,V) becomes U - V; Delta and hel stay as their own columns.
  static LinearForm compile(const Expr& e);

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm scaled(const Rational& k) const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

}  // namespace meanforge
