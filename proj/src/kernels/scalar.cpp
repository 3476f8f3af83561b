#include "kernels/kernel_impl.hpp"

#include <algorithm>
#include <cmath>

#include "formulas.hpp"

namespace meanforge::kernels::scalar {

namespace f = meanforge::formulas;

void normalized_means(const double* x, std::size_t n, double* const* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    out[kH][i] = f::harmonic(v, 1.0);
    out[kG][i] = f::geometric(v, 1.0);
    out[kN][i] = f::heronian(v, 1.0);
    out[kA][i] = f::arithmetic(v, 1.0);
    out[kR][i] = f::centroidal(v, 1.0);
    out[kS][i] = f::root_mean_square(v, 1.0);
    out[kC][i] = f::contra_harmonic(v, 1.0);
    out[kDelta][i] = f::triangular(v, 1.0);
    out[kHel][i] = f::hellinger(v, 1.0);
  }
}

void mean_curvatures(const double* x, std::size_t n, double* const* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    out[0][i] = f::curv_harmonic(v);
    out[1][i] = f::curv_geometric(v);
    out[2][i] = f::curv_heronian(v);
    out[3][i] = 0.0;
    out[4][i] = f::curv_centroidal(v);
    out[5][i] = f::curv_root_mean_square(v);
    out[6][i] = f::curv_contra_harmonic(v);
  }
}

void reduced_offsets(const double* x, std::size_t n, double* const* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    out[0][i] = f::red_harmonic(v);
    out[1][i] = f::red_geometric(v);
    out[2][i] = f::red_heronian(v);
    out[3][i] = 0.0;
    out[4][i] = f::red_centroidal(v);
    out[5][i] = f::red_root_mean_square(v);
    out[6][i] = f::red_contra_harmonic(v);
  }
}

void linear_combination(const double* const* cols, const double* coef, std::size_t ncols,
                        double constant, std::size_t n, double* out) {
  linear_combination_tail(cols, coef, ncols, constant, 0, n, out);
}

void compare(const double* lhs, const double* rhs, std::size_t n, Comparison cmp,
             double tol_rel, double tol_abs, double* excess, double* gap) {
  compare_tail(lhs, rhs, 0, n, cmp, tol_abs / tol_rel, excess, gap);
}

}  // namespace meanforge::kernels::scalar
