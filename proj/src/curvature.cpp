#include "meanforge/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "formulas.hpp"
#include "meanforge/error.hpp"
#include "meanforge/kernels.hpp"

namespace meanforge {

namespace f = formulas;

double mean_curvature(MeanKind kind, NormalizedArg x) {
  const double v = x.value();
  switch (kind) {
    case MeanKind::Harmonic: return f::curv_harmonic(v);
    case MeanKind::Geometric: return f::curv_geometric(v);
    case MeanKind::Heronian: return f::curv_heronian(v);
    case MeanKind::Arithmetic: return 0.0;
    case MeanKind::Centroidal: return f::curv_centroidal(v);
    case MeanKind::RootMeanSquare: return f::curv_root_mean_square(v);
    case MeanKind::ContraHarmonic: return f::curv_contra_harmonic(v);
  }
  return std::nan("");
}

double mean_slope(MeanKind kind, NormalizedArg x) {
  const double v = x.value();
  const double t = v + 1.0;
  switch (kind) {
    case MeanKind::Harmonic: return 2.0 / (t * t);
    case MeanKind::Geometric: return 1.0 / (2.0 * std::sqrt(v));
    case MeanKind::Heronian: return (1.0 + 1.0 / (2.0 * std::sqrt(v))) / 3.0;
    case MeanKind::Arithmetic: return 0.5;
    case MeanKind::Centroidal: return 2.0 / 3.0 * (1.0 - 1.0 / (t * t));
    case MeanKind::RootMeanSquare: return v / std::sqrt(2.0 * (v * v + 1.0));
    case MeanKind::ContraHarmonic: return 1.0 - 2.0 / (t * t);
  }
  return std::nan("");
}

double difference_curvature(const DifferencePair& d, NormalizedArg x) {
  return mean_curvature(d.upper(), x) - mean_curvature(d.lower(), x);
}

double difference_slope(const DifferencePair& d, NormalizedArg x) {
  return mean_slope(d.upper(), x) - mean_slope(d.lower(), x);
}

double finite_difference_curvature(const DifferencePair& d, NormalizedArg x, double step) {
  const double v = x.value();
  if (!(step >= 1e-6 * std::max(1.0, v))) {
    throw DomainError("finite-difference step " + std::to_string(step) +
                      " is below 1e-6 * max(1, x)");
  }
  if (!(v - step > 0.0)) {
    throw DomainError("finite-difference stencil leaves the domain: x - h <= 0");
  }
  auto fuv = [&](double at) {
    const NormalizedArg y(at);
    return normalized(d.upper(), y) - normalized(d.lower(), y);
  };
  return (fuv(v - step) - 2.0 * fuv(v) + fuv(v + step)) / (step * step);
}

std::vector<double> CurvatureGrid::points() const {
  std::vector<double> out;
  out.reserve(log_points + band_points);
  const double l0 = std::log(log_lo);
  const double l1 = std::log(log_hi);
  for (std::size_t i = 0; i < log_points; ++i) {
    const double t = log_points == 1 ? 0.0 : static_cast<double>(i) / (log_points - 1);
    out.push_back(std::exp(l0 + t * (l1 - l0)));
  }
  for (std::size_t i = 0; i < band_points; ++i) {
    const double t = band_points == 1 ? 0.0 : static_cast<double>(i) / (band_points - 1);
    out.push_back(band_lo + t * (band_hi - band_lo));
  }
  return out;
}

namespace {

void validate(const CurvatureGrid& grid) {
  if (!(grid.log_lo <= 1e-4 && grid.log_hi >= 1e4 && grid.log_points >= 10000)) {
    throw DomainError("convexity grid must cover [1e-4, 1e4] with at least 1e4 log points");
  }
  if (!(grid.log_lo > 0.0 && grid.band_lo > 0.0 && grid.band_lo <= grid.band_hi)) {
    throw DomainError("convexity grid bounds must be positive and ordered");
  }
}

struct GridCurvatures {
  std::vector<double> x;
  std::array<std::vector<double>, kernels::kMeanCount> columns;
};

GridCurvatures evaluate_grid(const CurvatureGrid& grid) {
  validate(grid);
  GridCurvatures g;
  g.x = grid.points();
  std::array<double*, kernels::kMeanCount> out{};
  for (std::size_t k = 0; k < kernels::kMeanCount; ++k) {
    g.columns[k].resize(g.x.size());
    out[k] = g.columns[k].data();
  }
  kernels::mean_curvatures(g.x, out);
  return g;
}

ConvexityVerdict certify_on(const DifferencePair& d, const GridCurvatures& g) {
  const auto& up = g.columns[index_of(d.upper())];
  const auto& lo = g.columns[index_of(d.lower())];
  double min_value = up[0] - lo[0];
  double min_at = g.x[0];
  for (std::size_t i = 1; i < g.x.size(); ++i) {
    const double c = up[i] - lo[i];
    if (c < min_value || (c == min_value && g.x[i] < min_at)) {
      min_value = c;
      min_at = g.x[i];
    }
  }
  ConvexityVerdict v{d, Convexity::Convex, std::nullopt, min_value, min_at};
  if (min_value < kConvexityThreshold) {
    v.verdict = Convexity::NotConvex;
    v.witness = min_at;
  }
  return v;
}

}  // namespace

ConvexityVerdict convexity_certify(const DifferencePair& d, const CurvatureGrid& grid) {
  return certify_on(d, evaluate_grid(grid));
}

std::vector<ConvexityVerdict> convexity_certify_all(const CurvatureGrid& grid) {
  const GridCurvatures g = evaluate_grid(grid);
  std::vector<ConvexityVerdict> out;
  for (const DifferencePair& d : all_difference_pairs()) out.push_back(certify_on(d, g));
  return out;
}

bool is_known_nonconvex(const DifferencePair& d) noexcept {
  using M = MeanKind;
  return d == DifferencePair(M::RootMeanSquare, M::Centroidal) ||
         d == DifferencePair(M::Heronian, M::Harmonic) ||
         d == DifferencePair(M::Geometric, M::Harmonic);
}

bool lemma21_bound_check(const DifferencePair& d, const PositivePair& p, const Tolerance& tol) {
  if (is_known_nonconvex(d)) {
    throw DomainError("tangent bound needs a convex difference; D_" + d.name() + " is not convex");
  }
  const double a = p.a();
  const double b = p.b();
  const NormalizedArg y(b / a);
  // phi_f(a, b) = a f(b/a) = D_UV(b, a); the stable form keeps it accurate near a = b.
  const double phi = stable_difference(d, PositivePair(b, a));
  const double bound = (b - a) * difference_slope(d, y);
  const Tolerance local = tol.scaled(a);
  return !(phi < -local.abs) && !local.le_violated(phi, bound);
}

}  // namespace meanforge
