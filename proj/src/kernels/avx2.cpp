// Compiled with -mavx2 only (no FMA) and dispatched at runtime.

#include "kernels/kernel_impl.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>

namespace meanforge::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d fabs4(__m256d v) { return _mm256_andnot_pd(splat(-0.0), v); }

inline __m256d cube(__m256d t) { return _mm256_mul_pd(_mm256_mul_pd(t, t), t); }

template <std::size_t N>
void scalar_tail(void (*fn)(const double*, std::size_t, double* const*), const double* x,
                 std::size_t begin, std::size_t n, double* const* out) {
  if (begin == n) return;
  std::array<double*, N> shifted;
  for (std::size_t k = 0; k < N; ++k) shifted[k] = out[k] + begin;
  fn(x + begin, n - begin, shifted.data());
}

}  // namespace

void normalized_means(const double* x, std::size_t n, double* const* out) {
  const __m256d one = splat(1.0);
  const __m256d two = splat(2.0);
  const __m256d three = splat(3.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d vp1 = _mm256_add_pd(v, one);
    const __m256d rt = _mm256_sqrt_pd(v);  // sqrt(x * 1) == sqrt(x)
    const __m256d sq = _mm256_mul_pd(v, v);
    const __m256d sq_p1 = _mm256_add_pd(sq, one);

    _mm256_storeu_pd(out[kH] + i, _mm256_div_pd(_mm256_mul_pd(two, v), vp1));
    _mm256_storeu_pd(out[kG] + i, rt);
    _mm256_storeu_pd(out[kN] + i, _mm256_div_pd(_mm256_add_pd(_mm256_add_pd(v, rt), one), three));
    _mm256_storeu_pd(out[kA] + i, _mm256_div_pd(vp1, two));
    const __m256d r_num = _mm256_mul_pd(two, _mm256_add_pd(_mm256_add_pd(sq, v), one));
    _mm256_storeu_pd(out[kR] + i, _mm256_div_pd(r_num, _mm256_mul_pd(three, vp1)));
    _mm256_storeu_pd(out[kS] + i, _mm256_sqrt_pd(_mm256_div_pd(sq_p1, two)));
    _mm256_storeu_pd(out[kC] + i, _mm256_div_pd(sq_p1, vp1));
    const __m256d d = _mm256_sub_pd(v, one);
    _mm256_storeu_pd(out[kDelta] + i, _mm256_div_pd(_mm256_mul_pd(d, d), vp1));
    const __m256d h = _mm256_sub_pd(rt, one);
    _mm256_storeu_pd(out[kHel] + i, _mm256_div_pd(_mm256_mul_pd(h, h), two));
  }
  scalar_tail<kColumnCount>(&scalar::normalized_means, x, i, n, out);
}

void mean_curvatures(const double* x, std::size_t n, double* const* out) {
  const __m256d one = splat(1.0);
  const __m256d two = splat(2.0);
  const __m256d three = splat(3.0);
  const __m256d four = splat(4.0);
  const __m256d twelve = splat(12.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d t3 = cube(_mm256_add_pd(v, one));
    const __m256d x32 = _mm256_mul_pd(v, _mm256_sqrt_pd(v));
    const __m256d u = _mm256_add_pd(_mm256_mul_pd(v, v), one);

    _mm256_storeu_pd(out[0] + i, _mm256_div_pd(splat(-4.0), t3));
    _mm256_storeu_pd(out[1] + i, _mm256_div_pd(splat(-1.0), _mm256_mul_pd(four, x32)));
    _mm256_storeu_pd(out[2] + i, _mm256_div_pd(splat(-1.0), _mm256_mul_pd(twelve, x32)));
    _mm256_storeu_pd(out[3] + i, _mm256_setzero_pd());
    _mm256_storeu_pd(out[4] + i, _mm256_div_pd(four, _mm256_mul_pd(three, t3)));
    const __m256d s_den = _mm256_mul_pd(u, _mm256_sqrt_pd(_mm256_mul_pd(two, u)));
    _mm256_storeu_pd(out[5] + i, _mm256_div_pd(one, s_den));
    _mm256_storeu_pd(out[6] + i, _mm256_div_pd(four, t3));
  }
  scalar_tail<kMeanCount>(&scalar::mean_curvatures, x, i, n, out);
}

void reduced_offsets(const double* x, std::size_t n, double* const* out) {
  const __m256d one = splat(1.0);
  const __m256d two = splat(2.0);
  const __m256d four = splat(4.0);
  const __m256d six = splat(6.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d v = _mm256_loadu_pd(x + i);
    const __m256d vp1 = _mm256_add_pd(v, one);
    const __m256d t = _mm256_add_pd(_mm256_sqrt_pd(v), one);
    const __m256d tt = _mm256_mul_pd(t, t);

    _mm256_storeu_pd(out[0] + i, _mm256_div_pd(splat(-1.0), _mm256_mul_pd(two, vp1)));
    _mm256_storeu_pd(out[1] + i, _mm256_div_pd(splat(-1.0), _mm256_mul_pd(two, tt)));
    _mm256_storeu_pd(out[2] + i, _mm256_div_pd(splat(-1.0), _mm256_mul_pd(six, tt)));
    _mm256_storeu_pd(out[3] + i, _mm256_setzero_pd());
    _mm256_storeu_pd(out[4] + i, _mm256_div_pd(one, _mm256_mul_pd(six, vp1)));
    const __m256d s =
        _mm256_sqrt_pd(_mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(v, v), one), two));
    const __m256d a = _mm256_div_pd(vp1, two);
    _mm256_storeu_pd(out[5] + i, _mm256_div_pd(one, _mm256_mul_pd(four, _mm256_add_pd(s, a))));
    _mm256_storeu_pd(out[6] + i, _mm256_div_pd(one, _mm256_mul_pd(two, vp1)));
  }
  scalar_tail<kMeanCount>(&scalar::reduced_offsets, x, i, n, out);
}

void linear_combination(const double* const* cols, const double* coef, std::size_t ncols,
                        double constant, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256d acc = splat(constant);
    for (std::size_t k = 0; k < ncols; ++k) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(splat(coef[k]), _mm256_loadu_pd(cols[k] + i)));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  linear_combination_tail(cols, coef, ncols, constant, i, n, out);
}

void compare(const double* lhs, const double* rhs, std::size_t n, Comparison cmp,
             double tol_rel, double tol_abs, double* excess, double* gap) {
  const double floor = tol_abs / tol_rel;
  const __m256d vfloor = splat(floor);
  const __m256d zero = _mm256_setzero_pd();
  const bool equal = cmp == Comparison::Equal;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d l = _mm256_loadu_pd(lhs + i);
    const __m256d r = _mm256_loadu_pd(rhs + i);
    const __m256d m = _mm256_max_pd(fabs4(l), fabs4(r));
    const __m256d diff = _mm256_sub_pd(l, r);
    const __m256d num = equal ? fabs4(diff) : diff;
    _mm256_storeu_pd(excess + i, _mm256_div_pd(num, _mm256_add_pd(m, vfloor)));
    const __m256d g = _mm256_div_pd(_mm256_sub_pd(r, l), m);
    const __m256d is_zero = _mm256_cmp_pd(m, zero, _CMP_EQ_OQ);
    _mm256_storeu_pd(gap + i, _mm256_blendv_pd(g, zero, is_zero));
  }
  compare_tail(lhs, rhs, i, n, cmp, floor, excess, gap);
}

}  // namespace meanforge::kernels::avx2

#endif
