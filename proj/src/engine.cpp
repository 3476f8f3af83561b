#include "meanforge/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "meanforge/error.hpp"
#include "meanforge/kernels.hpp"
#include "meanforge/linear_form.hpp"

namespace meanforge {

namespace {

using kernels::Comparison;

struct Link {
  LinearForm lhs;
  LinearForm rhs;
  Comparison cmp;
  double rel;
};

std::vector<Link> compile_links(const Relation& rel, const Tolerance& tol) {
  std::vector<Link> links;
  for (std::size_t i = 0; i < rel.ops.size(); ++i) {
    LinearForm l = LinearForm::compile(rel.operands[i]);
    LinearForm r = LinearForm::compile(rel.operands[i + 1]);
    switch (rel.ops[i]) {
      case RelOp::LessEqual: links.push_back({l, r, Comparison::LessEqual, tol.rel}); break;
      case RelOp::GreaterEqual: links.push_back({r, l, Comparison::LessEqual, tol.rel}); break;
      case RelOp::Equal: links.push_back({l, r, Comparison::Equal, tol.eq_rel}); break;
    }
  }
  return links;
}

std::string x_text(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// Running summary over samples; merged in block order so ties resolve to the
// earliest sample.
struct Stats {
  // Largest excess - rel over links: > 0 means violated.
  double worst_margin = -INFINITY;
  double worst_excess = -INFINITY;
  double worst_x = NAN;
  double min_gap = INFINITY;
  double min_gap_x = NAN;
  std::size_t above = 0;  // lhs > rhs beyond tolerance
  std::size_t below = 0;  // lhs < rhs beyond tolerance
  std::size_t n = 0;
  bool bad = false;  // a non-finite side was seen
  double bad_x = NAN;

  void merge(const Stats& o) {
    if (o.worst_margin > worst_margin) {
      worst_margin = o.worst_margin;
      worst_excess = o.worst_excess;
      worst_x = o.worst_x;
    }
    if (o.min_gap < min_gap) {
      min_gap = o.min_gap;
      min_gap_x = o.min_gap_x;
    }
    above += o.above;
    below += o.below;
    n += o.n;
    if (o.bad && !bad) {
      bad = true;
      bad_x = o.bad_x;
    }
  }
};

struct GiniKey {
  Rational r;
  Rational s;
  friend bool operator==(const GiniKey&, const GiniKey&) = default;
};

class BatchEvaluator {
 public:
  BatchEvaluator(const std::vector<Relation>& rels, const Tolerance& tol) : tol_(tol) {
    for (const Relation& r : rels) {
      links_.push_back(compile_links(r, tol));
      for (const Link& l : links_.back()) {
        for (const LinearForm* f : {&l.lhs, &l.rhs}) {
          for (const GiniTerm& g : f->gini) {
            const GiniKey key{g.r, g.s};
            if (std::find(gini_.begin(), gini_.end(), key) == gini_.end()) gini_.push_back(key);
          }
        }
      }
    }
  }

  std::size_t relations() const { return links_.size(); }

  // Per-block, per-relation statistics.
  void run_block(std::span<const double> x, std::vector<Stats>& out) {
    const std::size_t n = x.size();
    ensure(n);
    std::array<double*, kernels::kColumnCount> cols{};
    for (std::size_t k = 0; k < kernels::kColumnCount; ++k) cols[k] = columns_[k].data();
    kernels::normalized_means(x, cols);
    for (std::size_t g = 0; g < gini_.size(); ++g) {
      const GiniOrder order(gini_[g].r.to_double(), gini_[g].s.to_double());
      for (std::size_t i = 0; i < n; ++i) {
        gini_cols_[g][i] = gini_mean(order, PositivePair(x[i], 1.0));
      }
    }
    const kernels::KernelTable& kt = kernels::active();
    out.assign(links_.size(), Stats{});
    for (std::size_t r = 0; r < links_.size(); ++r) {
      Stats& st = out[r];
      st.n = n;
      for (const Link& link : links_[r]) {
        combine(link.lhs, n, lhs_.data());
        combine(link.rhs, n, rhs_.data());
        kt.compare(lhs_.data(), rhs_.data(), n, link.cmp, link.rel, tol_.abs, excess_.data(),
                   gap_.data());
        for (std::size_t i = 0; i < n; ++i) {
          if (!std::isfinite(lhs_[i]) || !std::isfinite(rhs_[i])) {
            if (!st.bad) {
              st.bad = true;
              st.bad_x = x[i];
            }
            continue;
          }
          const double margin = excess_[i] - link.rel;
          if (margin > st.worst_margin) {
            st.worst_margin = margin;
            st.worst_excess = excess_[i];
            st.worst_x = x[i];
          }
          if (link.cmp == Comparison::LessEqual && gap_[i] < st.min_gap) {
            st.min_gap = gap_[i];
            st.min_gap_x = x[i];
          }
          if (margin > 0.0) {
            ++st.above;
          } else if (excess_[i] < -link.rel) {
            ++st.below;
          }
        }
      }
    }
  }

 private:
  void ensure(std::size_t n) {
    if (lhs_.size() >= n) return;
    for (auto& c : columns_) c.resize(n);
    gini_cols_.assign(gini_.size(), std::vector<double>(n));
    lhs_.resize(n);
    rhs_.resize(n);
    excess_.resize(n);
    gap_.resize(n);
  }

  void combine(const LinearForm& f, std::size_t n, double* out) {
    ptrs_.clear();
    coefs_.clear();
    for (std::size_t k = 0; k < kernels::kColumnCount; ++k) {
      if (!f.coef[k].is_zero()) {
        ptrs_.push_back(columns_[k].data());
        coefs_.push_back(f.coef[k].to_double());
      }
    }
    for (const GiniTerm& t : f.gini) {
      const auto it = std::find(gini_.begin(), gini_.end(), GiniKey{t.r, t.s});
      ptrs_.push_back(gini_cols_[static_cast<std::size_t>(it - gini_.begin())].data());
      coefs_.push_back(t.coef.to_double());
    }
    kernels::active().linear_combination(ptrs_.data(), coefs_.data(), ptrs_.size(),
                                         f.constant.to_double(), n, out);
  }

  Tolerance tol_;
  std::vector<std::vector<Link>> links_;
  std::vector<GiniKey> gini_;
  std::array<std::vector<double>, kernels::kColumnCount> columns_;
  std::vector<std::vector<double>> gini_cols_;
  std::vector<double> lhs_, rhs_, excess_, gap_;
  std::vector<const double*> ptrs_;
  std::vector<double> coefs_;
};

std::vector<Stats> scan(const std::vector<Relation>& rels, const SampleStrategy& strategy,
                        const Tolerance& tol) {
  strategy.validate();
  const std::size_t blocks = block_count(strategy);
  std::vector<std::vector<Stats>> per_block(blocks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      BatchEvaluator eval(rels, tol);
      std::vector<double> x(kBlockSize);
      for (std::size_t b = next++; b < blocks; b = next++) {
        const std::size_t len = std::min(kBlockSize, strategy.count - b * kBlockSize);
        std::span<double> xs(x.data(), len);
        fill_block(strategy, b, xs);
        eval.run_block(xs, per_block[b]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };

  const std::size_t workers = worker_count(blocks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Stats> total(rels.size());
  for (const auto& block : per_block) {
    for (std::size_t r = 0; r < rels.size(); ++r) total[r].merge(block[r]);
  }
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (total[r].bad) {
      throw DomainError("relation '" + pretty(rels[r]) + "' is not finite at a = " +
                        x_text(total[r].bad_x) + ", b = 1");
    }
  }
  return total;
}

// Margin (excess - rel, maximized over links) and excess through the AST.
std::pair<double, double> ast_margin(const Relation& rel, const PositivePair& p,
                                     const Tolerance& tol) {
  std::vector<double> sides;
  try {
    for (const Expr& e : rel.operands) sides.push_back(evaluate(e, p));
  } catch (const DomainError& err) {
    throw DomainError(std::string(err.what()) + " while evaluating '" + pretty(rel) +
                      "' at a = " + x_text(p.a()) + ", b = " + x_text(p.b()));
  }
  double best_margin = -INFINITY;
  double best_excess = -INFINITY;
  for (std::size_t i = 0; i < rel.ops.size(); ++i) {
    double l = sides[i];
    double r = sides[i + 1];
    if (rel.ops[i] == RelOp::GreaterEqual) std::swap(l, r);
    const bool eq = rel.ops[i] == RelOp::Equal;
    const double rel_tol = eq ? tol.eq_rel : tol.rel;
    const double m = std::max(std::fabs(l), std::fabs(r));
    const double num = eq ? std::fabs(l - r) : l - r;
    const double excess = num / (m + tol.abs / rel_tol);
    if (excess - rel_tol > best_margin) {
      best_margin = excess - rel_tol;
      best_excess = excess;
    }
  }
  return {best_margin, best_excess};
}

constexpr double kSpotScales[] = {1e-3, 1e3};
constexpr std::size_t kSpotSamples = 64;

Verdict finish(const Relation& rel, const Stats& st, const SampleStrategy& strategy,
               const Tolerance& tol, const std::vector<double>& spot_x) {
  Verdict v;
  v.relation = pretty(rel);
  v.samples = strategy.count;
  v.seed = strategy.seed;
  double margin = st.worst_margin;
  double excess = st.worst_excess;
  std::optional<PositivePair> witness;
  if (margin > 0.0) witness = PositivePair(st.worst_x, 1.0);

  std::vector<double> xs = spot_x;
  xs.push_back(st.worst_x);
  if (std::isfinite(st.min_gap_x)) xs.push_back(st.min_gap_x);
  for (double b : kSpotScales) {
    const Tolerance scaled = tol.scaled(b);
    for (double x : xs) {
      const PositivePair p(x * b, b);
      const auto [m, e] = ast_margin(rel, p, scaled);
      if (m > margin) {
        margin = m;
        excess = e;
        if (m > 0.0) witness = p;
      }
    }
  }
  v.worst_violation = std::max(0.0, excess);
  v.holds = margin <= 0.0;
  if (!v.holds) v.witness = witness;
  if (std::isfinite(st.min_gap_x)) v.tight_at = st.min_gap_x;
  return v;
}

std::vector<double> spot_points(const SampleStrategy& strategy) {
  std::vector<double> x(std::min(kSpotSamples, strategy.count));
  fill_block(strategy, 0, x);
  return x;
}

}  // namespace

std::vector<Verdict> verify_relations(const std::vector<Relation>& rels,
                                      const SampleStrategy& strategy, const Tolerance& tol) {
  const std::vector<Stats> stats = scan(rels, strategy, tol);
  const std::vector<double> spot = spot_points(strategy);
  std::vector<Verdict> out;
  for (std::size_t r = 0; r < rels.size(); ++r) {
    out.push_back(finish(rels[r], stats[r], strategy, tol, spot));
  }
  return out;
}

Verdict verify_relation(const Relation& rel, const SampleStrategy& strategy, const Tolerance& tol) {
  return verify_relations({rel}, strategy, tol).front();
}

Verdict describe_relation(const Relation& rel, const SampleStrategy& strategy, const Tolerance& tol) {
  const Stats st = scan({rel}, strategy, tol).front();
  Verdict v;
  v.kind = VerdictKind::Descriptive;
  v.relation = pretty(rel);
  v.samples = strategy.count;
  v.seed = strategy.seed;
  v.worst_violation = std::max(0.0, st.worst_excess);
  const std::size_t total = st.n * rel.links();
  const double pct_above = 100.0 * static_cast<double>(st.above) / static_cast<double>(total);
  const double pct_below = 100.0 * static_cast<double>(st.below) / static_cast<double>(total);
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << "left side smaller on " << pct_below
     << "% of samples, larger on " << pct_above << "%";
  if (st.above > 0) os << std::setprecision(6) << "; largest excess at x = " << st.worst_x;
  v.note = os.str();
  return v;
}

std::optional<Counterexample> counterexample_search(const Relation& rel,
                                                    const SampleStrategy& strategy,
                                                    const Tolerance& tol) {
  const Stats st = scan({rel}, strategy, tol).front();
  auto score = [&](double t) { return ast_margin(rel, PositivePair(std::exp(t), 1.0), tol); };

  double best_t = std::log(st.worst_x);
  auto [best_margin, best_excess] = score(best_t);
  if (strategy.lo < strategy.hi) {
    double lo = std::max(std::log(strategy.lo), best_t - 0.5);
    double hi = std::min(std::log(strategy.hi), best_t + 0.5);
    for (int i = 0; i < 50; ++i) {
      const double q1 = lo + 0.25 * (hi - lo);
      const double q3 = lo + 0.75 * (hi - lo);
      const auto s1 = score(q1);
      const auto s3 = score(q3);
      for (const auto& [t, s] : {std::pair{q1, s1}, std::pair{q3, s3}}) {
        if (s.first > best_margin) {
          best_margin = s.first;
          best_excess = s.second;
          best_t = t;
        }
      }
      const double mid = 0.5 * (lo + hi);
      (s1.first >= s3.first ? hi : lo) = mid;
    }
  }
  if (!(best_margin > 0.0)) return std::nullopt;
  return Counterexample{PositivePair(std::exp(best_t), 1.0), best_excess};
}

const std::array<Rational, 10>& eq33_weights() {
  static const std::array<Rational, 10> w = {
      Rational(7, 2),  Rational(21, 8), Rational(3, 2), Rational(15, 8), Rational(35, 32),
      Rational(5, 6),  Rational(5, 4),  Rational(3, 4), Rational(7, 12), Rational(1, 2),
  };
  return w;
}

Eq33Values eq33_common_value(const PositivePair& p) {
  using M = MeanKind;
  const NormalizedArg x(p.ratio());
  // W_i = (a - b)^2 / b * w_i with w_i in reduced (cancellation-free) form.
  const double kC = reduced_offset(M::ContraHarmonic, x);
  const double kR = reduced_offset(M::Centroidal, x);
  const double kN = reduced_offset(M::Heronian, x);
  const double kG = reduced_offset(M::Geometric, x);
  const std::array<double, 5> w = {
      1.0 / (4.0 * (x.value() + 1.0)),
      3.0 / 7.0 * (kC - kN),
      1.0 / 3.0 * (kC - kG),
      3.0 / 5.0 * (kR - kG),
      -kG,
  };
  const double d = p.a() - p.b();
  const double scale = d * d / p.b();
  static constexpr std::array<std::pair<int, int>, 10> kPairs = {{
      {1, 0}, {2, 1}, {2, 0}, {3, 2}, {3, 1}, {3, 0}, {4, 3}, {4, 2}, {4, 1}, {4, 0},
  }};
  Eq33Values out{};
  double lo = INFINITY;
  double hi = -INFINITY;
  double sum = 0.0;
  for (std::size_t i = 0; i < kPairs.size(); ++i) {
    const auto [u, v] = kPairs[i];
    const double reduced = eq33_weights()[i].to_double() * (w[u] - w[v]);
    out.values[i] = reduced * scale;
    lo = std::min(lo, reduced);
    hi = std::max(hi, reduced);
    sum += reduced;
  }
  const double floor = 1e-4 * *std::max_element(w.begin(), w.end());
  out.spread = (hi - lo) / std::max(std::fabs(hi), floor);
  const double common = sum / 10.0;
  if (scale > 0.0 && common > floor) {
    // (sqrt(a) - sqrt(b))^4 / (a + b) over (a - b)^2 / b, without cancellation.
    const double s = std::sqrt(p.a()) + std::sqrt(p.b());
    const double quartic_reduced = d * d / (s * s * s * s) * p.b() / (p.a() + p.b());
    out.ratio_to_quartic = common / quartic_reduced;
  }
  return out;
}

}  // namespace meanforge
