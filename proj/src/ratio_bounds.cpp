#include "meanforge/ratio_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "meanforge/curvature.hpp"
#include "meanforge/error.hpp"

namespace meanforge {

RatioSpec::RatioSpec(DifferencePair numerator, DifferencePair denominator)
    : num_(numerator), den_(denominator) {
  if (is_known_nonconvex(den_)) {
    throw DomainError("ratio denominator D_" + den_.name() + " is not a convex difference");
  }
}

std::string RatioSpec::name() const { return num_.name() + "/" + den_.name(); }

namespace {

std::string x_text(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double finite_or_throw(double v, const RatioSpec& spec, double x) {
  if (!std::isfinite(v)) {
    throw DomainError("ratio " + spec.name() + " is not finite at x = " + x_text(x));
  }
  return v;
}

using Fn = std::function<double(double)>;  // of t = ln x

// Golden-section maximization on [lo, hi].
std::pair<double, double> golden_max(const Fn& h, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double hc = h(c);
  double hd = h(d);
  for (int i = 0; i < 64; ++i) {
    if (hc >= hd) {
      hi = d;
      d = c;
      hd = hc;
      c = hi - inv_phi * (hi - lo);
      hc = h(c);
    } else {
      lo = c;
      c = d;
      hc = hd;
      d = lo + inv_phi * (hi - lo);
      hd = h(d);
    }
  }
  return hc >= hd ? std::pair{c, hc} : std::pair{d, hd};
}

// Outer edge of {h >= level} walking from `from` towards `limit`.
double level_edge(const Fn& h, double from, double limit, double level) {
  const double dir = limit > from ? 1.0 : -1.0;
  const double span = std::fabs(limit - from);
  double inside = from;
  double step = 1e-12;
  double outside = from;
  for (;;) {
    if (step >= span) {
      if (h(limit) >= level) return limit;
      outside = limit;
      break;
    }
    const double t = from + dir * step;
    if (h(t) < level) {
      outside = t;
      break;
    }
    inside = t;
    step *= 2.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    (h(mid) >= level ? inside : outside) = mid;
  }
  return 0.5 * (inside + outside);
}

std::vector<double> grid_t(const ProbeGrid& grid) {
  if (!(grid.lo > 0.0 && grid.lo < grid.hi && grid.points >= 3)) {
    throw DomainError("probe grid needs 0 < lo < hi and at least 3 points");
  }
  std::vector<double> t(grid.points);
  const double t0 = std::log(grid.lo);
  const double t1 = std::log(grid.hi);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(t.size() - 1);
  }
  return t;
}

RatioMaximum maximize(const Fn& h, const std::vector<double>& t) {
  std::vector<double> v(t.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    v[i] = h(t[i]);
    if (v[i] > v[best]) best = i;
  }
  const double lo = t[best == 0 ? 0 : best - 1];
  const double hi = t[std::min(best + 1, t.size() - 1)];
  auto [tg, hg] = golden_max(h, lo, hi);
  if (v[best] > hg) {
    tg = t[best];
    hg = v[best];
  }
  const double level = hg - 1e-9 * std::fabs(hg);
  const double left = level_edge(h, tg, t.front(), level);
  const double right = level_edge(h, tg, t.back(), level);
  return {hg, std::exp(0.5 * (left + right)), slope_sign_changes(v) == 1 && best > 0 && best + 1 < t.size()};
}

Fn in_log(const RatioSpec& spec, bool curvature) {
  if (curvature) return [spec](double t) { return ratio(spec, NormalizedArg(std::exp(t))); };
  return [spec](double t) { return difference_ratio(spec, NormalizedArg(std::exp(t))); };
}

}  // namespace

double ratio(const RatioSpec& spec, NormalizedArg x) {
  const double den = difference_curvature(spec.denominator(), x);
  if (!(den > 1e-300)) {
    throw DomainError("curvature of D_" + spec.denominator().name() +
                      " is not positive at x = " + x_text(x));
  }
  return finite_or_throw(difference_curvature(spec.numerator(), x) / den, spec, x);
}

double difference_ratio(const RatioSpec& spec, NormalizedArg x) {
  return finite_or_throw(
      reduced_difference(spec.numerator(), x) / reduced_difference(spec.denominator(), x), spec,
      x);
}

std::size_t slope_sign_changes(const std::vector<double>& values) {
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::fabs(v));
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  std::size_t changes = 0;
  int last = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double d = values[i] - values[i - 1];
    if (std::fabs(d) <= noise) continue;
    const int sign = d > 0 ? 1 : -1;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

std::vector<double> ratio_profile(const RatioSpec& spec, bool curvature, const ProbeGrid& grid) {
  const Fn h = in_log(spec, curvature);
  std::vector<double> v;
  for (double t : grid_t(grid)) v.push_back(h(t));
  return v;
}

SharpConstant sharp_constant(const RatioSpec& spec, const ProbeGrid& grid) {
  const std::vector<double> t = grid_t(grid);
  const RatioMaximum q = maximize(in_log(spec, false), t);
  const RatioMaximum g = maximize(in_log(spec, true), t);
  return {spec, q.value, q.argmax, q.unimodal, g};
}

const std::vector<RatioBound>& theorem31_constants() {
  using M = MeanKind;
  static const std::vector<RatioBound> bounds = [] {
    const DifferencePair SA(M::RootMeanSquare, M::Arithmetic);
    const DifferencePair SN(M::RootMeanSquare, M::Heronian);
    const DifferencePair SH(M::RootMeanSquare, M::Harmonic);
    const DifferencePair SG(M::RootMeanSquare, M::Geometric);
    const DifferencePair CR(M::ContraHarmonic, M::Centroidal);
    const DifferencePair CN(M::ContraHarmonic, M::Heronian);
    const DifferencePair CS(M::ContraHarmonic, M::RootMeanSquare);
    const DifferencePair CG(M::ContraHarmonic, M::Geometric);
    const DifferencePair RG(M::Centroidal, M::Geometric);
    const DifferencePair AN(M::Arithmetic, M::Heronian);
    return std::vector<RatioBound>{
        {{SA, SN}, {3, 4}}, {{SA, SH}, {1, 3}}, {{SH, CR}, {9, 4}}, {{CR, CN}, {4, 7}},
        {{CR, SG}, {2, 3}}, {{SN, CN}, {4, 7}}, {{SN, SG}, {2, 3}}, {{CN, CS}, {7, 3}},
        {{CS, AN}, {3, 1}}, {{CN, CG}, {7, 9}}, {{SG, RG}, {6, 5}}, {{CG, RG}, {9, 5}},
        {{RG, AN}, {5, 1}},
    };
  }();
  return bounds;
}

std::optional<Rational> theorem31_lookup(const RatioSpec& spec) {
  for (const RatioBound& b : theorem31_constants()) {
    if (b.spec == spec) return b.constant;
  }
  return std::nullopt;
}

bool lemma31_sandwich_check(const RatioSpec& spec, double alpha, double beta,
                            const PositivePair& p, const Tolerance& tol) {
  if (!(alpha >= 0.0 && alpha < beta)) {
    throw DomainError("sandwich bounds need 0 <= alpha < beta");
  }
  const double num = stable_difference(spec.numerator(), p);
  const double den = stable_difference(spec.denominator(), p);
  const Tolerance local = tol.scaled(p.b());
  return !local.le_violated(alpha * den, num) && !local.le_violated(num, beta * den);
}

std::string_view auxiliary_name(Auxiliary aux) noexcept {
  switch (aux) {
    case Auxiliary::V1: return "v1";
    case Auxiliary::V2: return "v2";
    case Auxiliary::V3a: return "v3a";
    case Auxiliary::V3b: return "v3b";
    case Auxiliary::H2: return "h2";
    case Auxiliary::H3: return "h3";
    case Auxiliary::Quartic: return "quartic";
  }
  return "?";
}

std::optional<Auxiliary> auxiliary_from_name(std::string_view name) noexcept {
  for (Auxiliary a : kAllAuxiliaries) {
    if (auxiliary_name(a) == name) return a;
  }
  return std::nullopt;
}

AuxiliaryValue auxiliary_check(Auxiliary aux, NormalizedArg xa) {
  const double x = xa.value();
  const double r = std::sqrt(x);
  const double u = x * x + 1.0;
  const double w = std::sqrt(2.0 * u);  // sqrt(2x^2 + 2)
  const double s = std::sqrt(u / 2.0);
  const double m = (r - 1.0) * (r - 1.0);
  const double quartic_factor = m * m;  // (sqrt(x) - 1)^4

  // v2 = P2 - Q2, v3b = P3 - Q3.
  const double p2 = 10.0 * x * x + 10.0 + 4.0 * x + 2.0 * x * r + 2.0 * r;
  const double q2 = 7.0 * (x + 1.0) * w;
  const double h2f = (2.0 * x * x + 48.0 * x * r + 68.0 * x + 48.0 * r + 2.0) * quartic_factor;
  const double p3 = 8.0 * (x * x + x + 1.0) - 2.0 * r * (x + 1.0);
  const double q3 = 5.0 * (x + 1.0) * w;
  const double h3f = (14.0 * x * x + 24.0 * x * r + 44.0 * x + 24.0 * r + 14.0) * quartic_factor;

  auto pow5 = [](double v) { return v * v * v * v * v; };
  switch (aux) {
    case Auxiliary::V1: {
      const double v = u * u * w - 8.0 * x * x * r;
      return {v, std::fabs(v - 8.0 * (pow5(s) - pow5(r)))};
    }
    case Auxiliary::V3a: {
      const double v = 4.0 * u * u * w - pow5(x + 1.0);
      return {v, std::fabs(v - 32.0 * (pow5(s) - pow5((x + 1.0) / 2.0)))};
    }
    case Auxiliary::V2: {
      const double v = p2 - q2;
      return {v, std::fabs(v - h2f / (p2 + q2))};
    }
    case Auxiliary::V3b: {
      const double v = p3 - q3;
      return {v, std::fabs(v - h3f / (p3 + q3))};
    }
    case Auxiliary::H2: {
      const double v = p2 * p2 - q2 * q2;
      return {v, std::fabs(v - h2f)};
    }
    case Auxiliary::H3: {
      const double v = p3 * p3 - q3 * q3;
      return {v, std::fabs(v - h3f)};
    }
    case Auxiliary::Quartic: {
      const double a = 4.0 * (x * x + x + 1.0);
      const double b = r * (x + 1.0);
      const double v = a * a - b * b;
      const double poly = (((16.0 * x + 31.0) * x + 46.0) * x + 31.0) * x + 16.0;
      return {v, std::fabs(v - poly)};
    }
  }
  return {std::nan(""), std::nan("")};
}

}  // namespace meanforge
