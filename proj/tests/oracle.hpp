#pragma once

// 50-digit reference values, independent of the library's formulas.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>

#include "meanforge/means.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_50;

inline Big mean(meanforge::MeanKind kind, Big a, Big b) {
  using meanforge::MeanKind;
  using boost::multiprecision::sqrt;
  switch (kind) {
    case MeanKind::Harmonic: return 2 * a * b / (a + b);
    case MeanKind::Geometric: return sqrt(a * b);
    case MeanKind::Heronian: return (a + sqrt(a * b) + b) / 3;
    case MeanKind::Arithmetic: return (a + b) / 2;
    case MeanKind::Centroidal: return 2 * (a * a + a * b + b * b) / (3 * (a + b));
    case MeanKind::RootMeanSquare: return sqrt((a * a + b * b) / 2);
    case MeanKind::ContraHarmonic: return (a * a + b * b) / (a + b);
  }
  return 0;
}

inline double mean(meanforge::MeanKind kind, double a, double b) {
  return static_cast<double>(mean(kind, Big(a), Big(b)));
}

inline double difference(meanforge::MeanKind u, meanforge::MeanKind v, double a, double b) {
  return static_cast<double>(mean(u, Big(a), Big(b)) - mean(v, Big(a), Big(b)));
}

inline double triangular(double a, double b) {
  const Big d = Big(a) - Big(b);
  return static_cast<double>(d * d / (Big(a) + Big(b)));
}

inline double hellinger(double a, double b) {
  using boost::multiprecision::sqrt;
  const Big d = sqrt(Big(a)) - sqrt(Big(b));
  return static_cast<double>(d * d / 2);
}

/// Gini mean straight from its three-branch definition.
inline double gini(double r, double s, double a, double b) {
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Big A(a), B(b), R(r), S(s);
  if (r != s) {
    return static_cast<double>(pow((pow(A, R) + pow(B, R)) / (pow(A, S) + pow(B, S)), 1 / (R - S)));
  }
  if (r == 0) return static_cast<double>(sqrt(A * B));
  const Big ar = pow(A, R);
  const Big br = pow(B, R);
  return static_cast<double>(exp((ar * log(A) + br * log(B)) / (ar + br)));
}

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::fabs(got);
  return std::fabs(got - want) / std::fabs(want);
}

}  // namespace oracle
