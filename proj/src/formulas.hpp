#pragma once

// Closed forms shared by the means API and the scalar kernels. The SIMD
// kernels reproduce these operation sequences exactly; any change here must be
// mirrored in kernels/avx2.cpp and kernels/neon.cpp.

#include <cmath>

namespace meanforge::formulas {

inline double harmonic(double a, double b) { return 2.0 * a * b / (a + b); }
inline double geometric(double a, double b) { return std::sqrt(a * b); }
inline double heronian(double a, double b) { return (a + std::sqrt(a * b) + b) / 3.0; }
inline double arithmetic(double a, double b) { return (a + b) / 2.0; }
inline double centroidal(double a, double b) {
  return 2.0 * (a * a + a * b + b * b) / (3.0 * (a + b));
}
inline double root_mean_square(double a, double b) { return std::sqrt((a * a + b * b) / 2.0); }
inline double contra_harmonic(double a, double b) { return (a * a + b * b) / (a + b); }

inline double triangular(double a, double b) {
  const double d = a - b;
  return d * d / (a + b);
}
inline double hellinger(double a, double b) {
  const double d = std::sqrt(a) - std::sqrt(b);
  return d * d / 2.0;
}

// Second derivatives of the normalized forms.
inline double cube(double t) { return t * t * t; }
inline double curv_harmonic(double x) { return -4.0 / cube(x + 1.0); }
inline double curv_geometric(double x) { return -1.0 / (4.0 * (x * std::sqrt(x))); }
inline double curv_heronian(double x) { return -1.0 / (12.0 * (x * std::sqrt(x))); }
inline double curv_centroidal(double x) { return 4.0 / (3.0 * cube(x + 1.0)); }
inline double curv_root_mean_square(double x) {
  const double u = x * x + 1.0;
  return 1.0 / (u * std::sqrt(2.0 * u));
}
inline double curv_contra_harmonic(double x) { return 4.0 / cube(x + 1.0); }

// Reduced offsets k_M(x) = (f_M(x) - f_A(x)) / (x - 1)^2.
inline double red_harmonic(double x) { return -1.0 / (2.0 * (x + 1.0)); }
inline double red_geometric(double x) {
  const double t = std::sqrt(x) + 1.0;
  return -1.0 / (2.0 * (t * t));
}
inline double red_heronian(double x) {
  const double t = std::sqrt(x) + 1.0;
  return -1.0 / (6.0 * (t * t));
}
inline double red_centroidal(double x) { return 1.0 / (6.0 * (x + 1.0)); }
inline double red_root_mean_square(double x) {
  const double s = std::sqrt((x * x + 1.0) / 2.0);
  const double a = (x + 1.0) / 2.0;
  return 1.0 / (4.0 * (s + a));
}
inline double red_contra_harmonic(double x) { return 1.0 / (2.0 * (x + 1.0)); }

}  // namespace meanforge::formulas
