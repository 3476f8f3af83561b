#include "kernels/kernel_impl.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <array>

namespace meanforge::kernels::neon {

namespace {

constexpr std::size_t kLanes = 2;

inline float64x2_t splat(double v) { return vdupq_n_f64(v); }

inline float64x2_t cube(float64x2_t t) { return vmulq_f64(vmulq_f64(t, t), t); }

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
  const float64x2_t one = splat(1.0);
  const float64x2_t two = splat(2.0);
  const float64x2_t three = splat(3.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t v = vld1q_f64(x + i);
    const float64x2_t vp1 = vaddq_f64(v, one);
    const float64x2_t rt = vsqrtq_f64(v);
    const float64x2_t sq = vmulq_f64(v, v);
    const float64x2_t sq_p1 = vaddq_f64(sq, one);

    vst1q_f64(out[kH] + i, vdivq_f64(vmulq_f64(two, v), vp1));
    vst1q_f64(out[kG] + i, rt);
    vst1q_f64(out[kN] + i, vdivq_f64(vaddq_f64(vaddq_f64(v, rt), one), three));
    vst1q_f64(out[kA] + i, vdivq_f64(vp1, two));
    const float64x2_t r_num = vmulq_f64(two, vaddq_f64(vaddq_f64(sq, v), one));
    vst1q_f64(out[kR] + i, vdivq_f64(r_num, vmulq_f64(three, vp1)));
    vst1q_f64(out[kS] + i, vsqrtq_f64(vdivq_f64(sq_p1, two)));
    vst1q_f64(out[kC] + i, vdivq_f64(sq_p1, vp1));
    const float64x2_t d = vsubq_f64(v, one);
    vst1q_f64(out[kDelta] + i, vdivq_f64(vmulq_f64(d, d), vp1));
    const float64x2_t h = vsubq_f64(rt, one);
    vst1q_f64(out[kHel] + i, vdivq_f64(vmulq_f64(h, h), two));
  }
  scalar_tail<kColumnCount>(&scalar::normalized_means, x, i, n, out);
}

void mean_curvatures(const double* x, std::size_t n, double* const* out) {
  const float64x2_t one = splat(1.0);
  const float64x2_t two = splat(2.0);
  const float64x2_t three = splat(3.0);
  const float64x2_t four = splat(4.0);
  const float64x2_t twelve = splat(12.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t v = vld1q_f64(x + i);
    const float64x2_t t3 = cube(vaddq_f64(v, one));
    const float64x2_t x32 = vmulq_f64(v, vsqrtq_f64(v));
    const float64x2_t u = vaddq_f64(vmulq_f64(v, v), one);

    vst1q_f64(out[0] + i, vdivq_f64(splat(-4.0), t3));
    vst1q_f64(out[1] + i, vdivq_f64(splat(-1.0), vmulq_f64(four, x32)));
    vst1q_f64(out[2] + i, vdivq_f64(splat(-1.0), vmulq_f64(twelve, x32)));
    vst1q_f64(out[3] + i, splat(0.0));
    vst1q_f64(out[4] + i, vdivq_f64(four, vmulq_f64(three, t3)));
    vst1q_f64(out[5] + i, vdivq_f64(one, vmulq_f64(u, vsqrtq_f64(vmulq_f64(two, u)))));
    vst1q_f64(out[6] + i, vdivq_f64(four, t3));
  }
  scalar_tail<kMeanCount>(&scalar::mean_curvatures, x, i, n, out);
}

void reduced_offsets(const double* x, std::size_t n, double* const* out) {
  const float64x2_t one = splat(1.0);
  const float64x2_t two = splat(2.0);
  const float64x2_t four = splat(4.0);
  const float64x2_t six = splat(6.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t v = vld1q_f64(x + i);
    const float64x2_t vp1 = vaddq_f64(v, one);
    const float64x2_t t = vaddq_f64(vsqrtq_f64(v), one);
    const float64x2_t tt = vmulq_f64(t, t);

    vst1q_f64(out[0] + i, vdivq_f64(splat(-1.0), vmulq_f64(two, vp1)));
    vst1q_f64(out[1] + i, vdivq_f64(splat(-1.0), vmulq_f64(two, tt)));
    vst1q_f64(out[2] + i, vdivq_f64(splat(-1.0), vmulq_f64(six, tt)));
    vst1q_f64(out[3] + i, splat(0.0));
    vst1q_f64(out[4] + i, vdivq_f64(one, vmulq_f64(six, vp1)));
    const float64x2_t s = vsqrtq_f64(vdivq_f64(vaddq_f64(vmulq_f64(v, v), one), two));
    const float64x2_t a = vdivq_f64(vp1, two);
    vst1q_f64(out[5] + i, vdivq_f64(one, vmulq_f64(four, vaddq_f64(s, a))));
    vst1q_f64(out[6] + i, vdivq_f64(one, vmulq_f64(two, vp1)));
  }
  scalar_tail<kMeanCount>(&scalar::reduced_offsets, x, i, n, out);
}

void linear_combination(const double* const* cols, const double* coef, std::size_t ncols,
                        double constant, std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    float64x2_t acc = splat(constant);
    for (std::size_t k = 0; k < ncols; ++k) {
      acc = vaddq_f64(acc, vmulq_f64(splat(coef[k]), vld1q_f64(cols[k] + i)));
    }
    vst1q_f64(out + i, acc);
  }
  linear_combination_tail(cols, coef, ncols, constant, i, n, out);
}

void compare(const double* lhs, const double* rhs, std::size_t n, Comparison cmp,
             double tol_rel, double tol_abs, double* excess, double* gap) {
  const double floor = tol_abs / tol_rel;
  const float64x2_t vfloor = splat(floor);
  const float64x2_t zero = splat(0.0);
  const bool equal = cmp == Comparison::Equal;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const float64x2_t l = vld1q_f64(lhs + i);
    const float64x2_t r = vld1q_f64(rhs + i);
    const float64x2_t m = vmaxq_f64(vabsq_f64(l), vabsq_f64(r));
    const float64x2_t diff = vsubq_f64(l, r);
    const float64x2_t num = equal ? vabsq_f64(diff) : diff;
    vst1q_f64(excess + i, vdivq_f64(num, vaddq_f64(m, vfloor)));
    const float64x2_t g = vdivq_f64(vsubq_f64(r, l), m);
    vst1q_f64(gap + i, vbslq_f64(vceqq_f64(m, zero), zero, g));
  }
  compare_tail(lhs, rhs, i, n, cmp, floor, excess, gap);
}

}  // namespace meanforge::kernels::neon

#endif
