#pragma once

#include <cmath>
#include <cstddef>

#include "meanforge/kernels.hpp"

namespace meanforge::kernels {

// Scalar element loops shared by every variant for remainders.
inline void linear_combination_tail(const double* const* cols, const double* coef,
                                    std::size_t ncols, double constant, std::size_t begin,
                                    std::size_t end, double* out) {
  for (std::size_t i = begin; i < end; ++i) {
    double acc = constant;
    for (std::size_t k = 0; k < ncols; ++k) acc = acc + coef[k] * cols[k][i];
    out[i] = acc;
  }
}

inline void compare_tail(const double* lhs, const double* rhs, std::size_t begin,
                         std::size_t end, Comparison cmp, double floor, double* excess,
                         double* gap) {
  for (std::size_t i = begin; i < end; ++i) {
    const double l = lhs[i];
    const double r = rhs[i];
    const double la = std::fabs(l);
    const double ra = std::fabs(r);
    const double m = la < ra ? ra : la;
    const double diff = l - r;
    const double num = cmp == Comparison::Equal ? std::fabs(diff) : diff;
    excess[i] = num / (m + floor);
    gap[i] = m == 0.0 ? 0.0 : (r - l) / m;
  }
}

namespace scalar {
void normalized_means(const double* x, std::size_t n, double* const* out);
void mean_curvatures(const double* x, std::size_t n, double* const* out);
void reduced_offsets(const double* x, std::size_t n, double* const* out);
void linear_combination(const double* const* cols, const double* coef, std::size_t ncols,
                        double constant, std::size_t n, double* out);
void compare(const double* lhs, const double* rhs, std::size_t n, Comparison cmp,
             double tol_rel, double tol_abs, double* excess, double* gap);
}  // namespace scalar

#define MEANFORGE_DECLARE_VARIANT(ns)                                                       \
  namespace ns {                                                                           \
  void normalized_means(const double* x, std::size_t n, double* const* out);               \
  void mean_curvatures(const double* x, std::size_t n, double* const* out);                \
  void reduced_offsets(const double* x, std::size_t n, double* const* out);                \
  void linear_combination(const double* const* cols, const double* coef, std::size_t ncols, \
                          double constant, std::size_t n, double* out);                    \
  void compare(const double* lhs, const double* rhs, std::size_t n, Comparison cmp,        \
               double tol_rel, double tol_abs, double* excess, double* gap);               \
  }

MEANFORGE_DECLARE_VARIANT(avx2)
MEANFORGE_DECLARE_VARIANT(neon)

#undef MEANFORGE_DECLARE_VARIANT

}  // namespace meanforge::kernels
