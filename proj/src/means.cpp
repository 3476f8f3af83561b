#include "meanforge/means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "formulas.hpp"
#include "meanforge/error.hpp"

namespace meanforge {

namespace {

namespace f = formulas;

std::string point_text(double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a << ", " << b << ")";
  return os.str();
}

double checked(double value, MeanKind kind, double a, double b) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError(std::string("mean ") + symbol(kind) + " is not representable at " +
                      point_text(a, b));
  }
  return value;
}

double raw_mean(MeanKind kind, double a, double b) {
  switch (kind) {
    case MeanKind::Harmonic: return f::harmonic(a, b);
    case MeanKind::Geometric: return f::geometric(a, b);
    case MeanKind::Heronian: return f::heronian(a, b);
    case MeanKind::Arithmetic: return f::arithmetic(a, b);
    case MeanKind::Centroidal: return f::centroidal(a, b);
    case MeanKind::RootMeanSquare: return f::root_mean_square(a, b);
    case MeanKind::ContraHarmonic: return f::contra_harmonic(a, b);
  }
  return std::nan("");
}

// ln cosh(y) without overflow.
double log_cosh(double y) {
  const double t = std::fabs(y);
  return t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0);
}

constexpr double kGiniEqualOrders = 1e-9;

}  // namespace

PositivePair::PositivePair(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b <= 0.0) {
    throw DomainError("expected finite positive a, b; got " + point_text(a, b));
  }
}

NormalizedArg::NormalizedArg(double x) : x_(x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("expected finite positive x; got " + point_text(x, 1.0).substr(1));
  }
}

char symbol(MeanKind kind) noexcept {
  static constexpr char kSymbols[] = {'H', 'G', 'N', 'A', 'R', 'S', 'C'};
  return kSymbols[index_of(kind)];
}

std::string_view name(MeanKind kind) noexcept {
  switch (kind) {
    case MeanKind::Harmonic: return "harmonic";
    case MeanKind::Geometric: return "geometric";
    case MeanKind::Heronian: return "heronian";
    case MeanKind::Arithmetic: return "arithmetic";
    case MeanKind::Centroidal: return "centroidal";
    case MeanKind::RootMeanSquare: return "root-mean-square";
    case MeanKind::ContraHarmonic: return "contra-harmonic";
  }
  return "unknown";
}

std::optional<MeanKind> mean_from_symbol(char c) noexcept {
  for (MeanKind k : kAllMeans) {
    if (symbol(k) == c) return k;
  }
  return std::nullopt;
}

GiniOrder::GiniOrder(double r_, double s_) : r(r_), s(s_) {
  if (!std::isfinite(r_) || !std::isfinite(s_)) {
    throw DomainError("Gini orders must be finite");
  }
}

DifferencePair::DifferencePair(MeanKind upper, MeanKind lower) : upper_(upper), lower_(lower) {
  if (!(lower < upper)) {
    throw DomainError(std::string("difference D_") + symbol(upper) + symbol(lower) +
                      " requires the first mean above the second in H<G<N<A<R<S<C");
  }
}

std::string DifferencePair::name() const { return {symbol(upper_), symbol(lower_)}; }

namespace {

// Pyramid order: rows by upper mean G..C, lower mean descending from upper - 1.
DifferencePair pair_at(std::size_t index) {
  for (std::size_t u = 1; u < kAllMeans.size(); ++u) {
    if (index < u) return DifferencePair(kAllMeans[u], kAllMeans[u - 1 - index]);
    index -= u;
  }
  throw DomainError("difference pair index out of range");
}

template <std::size_t... I>
std::array<DifferencePair, sizeof...(I)> make_pairs(std::index_sequence<I...>) {
  return {pair_at(I)...};
}

}  // namespace

const std::array<DifferencePair, 21>& all_difference_pairs() {
  static const auto pairs = make_pairs(std::make_index_sequence<21>{});
  return pairs;
}

std::optional<DifferencePair> difference_from_name(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  const auto u = mean_from_symbol(text[0]);
  const auto l = mean_from_symbol(text[1]);
  if (!u || !l || !(*l < *u)) return std::nullopt;
  return DifferencePair(*u, *l);
}

double mean(MeanKind kind, const PositivePair& p) {
  return checked(raw_mean(kind, p.a(), p.b()), kind, p.a(), p.b());
}

double gini_mean(const GiniOrder& order, const PositivePair& p) {
  // With mu = ln G and delta = ln(a/b)/2, a^t + b^t = 2 e^{t mu} cosh(t delta), so
  // E_{r,s} = G * exp((psi(r) - psi(s)) / (r - s)) with psi(t) = ln cosh(t delta).
  // Nothing here is raised to the power r or s, hence no overflow for any order.
  double r = order.r;
  double s = order.s;
  if (r < s) std::swap(r, s);
  const double a = p.a();
  const double b = p.b();

  if (r == 0.0 && s == 0.0) {
    const double g = std::sqrt(a * b);
    if (std::isfinite(g) && g > 0.0) return g;
  }
  const double la = std::log(a);
  const double lb = std::log(b);
  const double mu = (la + lb) / 2.0;
  const double delta = (la - lb) / 2.0;

  double exponent;
  if (r - s < kGiniEqualOrders) {
    // exp((a^t ln a + b^t ln b) / (a^t + b^t)) at t = r = s.
    const double t = (r + s) / 2.0;
    exponent = mu + delta * std::tanh(t * delta);
  } else {
    const double e = (r - s) * delta;
    double psi_gap;
    if (std::fabs(e) < 1.0) {
      // cosh(y + e) / cosh(y) - 1 = 2 sinh^2(e/2) + tanh(y) sinh(e), y = s delta.
      const double sh = std::sinh(e / 2.0);
      psi_gap = std::log1p(2.0 * sh * sh + std::tanh(s * delta) * std::sinh(e));
    } else {
      psi_gap = log_cosh(r * delta) - log_cosh(s * delta);
    }
    exponent = mu + psi_gap / (r - s);
  }
  const double value = std::exp(exponent);
  if (!std::isfinite(value) || value <= 0.0) {
    throw DomainError("Gini mean is not representable at " + point_text(a, b));
  }
  return value;
}

double normalized(MeanKind kind, NormalizedArg x) {
  return checked(raw_mean(kind, x.value(), 1.0), kind, x.value(), 1.0);
}

double difference(const DifferencePair& d, const PositivePair& p) {
  // The true value is nonnegative; rounding can leave -1 ulp when a ~ b.
  return std::max(0.0, mean(d.upper(), p) - mean(d.lower(), p));
}

double triangular_discrimination(const PositivePair& p) {
  return f::triangular(p.a(), p.b());
}

double hellinger(const PositivePair& p) { return f::hellinger(p.a(), p.b()); }

double reduced_offset(MeanKind kind, NormalizedArg x) {
  const double v = x.value();
  switch (kind) {
    case MeanKind::Harmonic: return f::red_harmonic(v);
    case MeanKind::Geometric: return f::red_geometric(v);
    case MeanKind::Heronian: return f::red_heronian(v);
    case MeanKind::Arithmetic: return 0.0;
    case MeanKind::Centroidal: return f::red_centroidal(v);
    case MeanKind::RootMeanSquare: return f::red_root_mean_square(v);
    case MeanKind::ContraHarmonic: return f::red_contra_harmonic(v);
  }
  return std::nan("");
}

double reduced_difference(const DifferencePair& d, NormalizedArg x) {
  return reduced_offset(d.upper(), x) - reduced_offset(d.lower(), x);
}

double stable_difference(const DifferencePair& d, const PositivePair& p) {
  const double gap = p.a() - p.b();
  return gap * gap / p.b() * reduced_difference(d, NormalizedArg(p.ratio()));
}

}  // namespace meanforge
