// Acceptance checks. One line per criterion: "criterion N PASS|FAIL title: detail".
// With --criterion N only that one runs; the exit status is 0 iff all that ran pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "expr_gen.hpp"
#include "meanforge/curvature.hpp"
#include "meanforge/engine.hpp"
#include "meanforge/error.hpp"
#include "meanforge/ratio_bounds.hpp"
#include "meanforge/suites.hpp"
#include "printed_curvatures.hpp"

using namespace meanforge;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail.clear();
  else o.detail += "; ";
  o.pass = false;
  o.detail += why;
}

// Check verdicts only; descriptive ones never fail.
int count_failures(const std::vector<Verdict>& vs, Outcome& o) {
  int n = 0;
  for (const Verdict& v : vs) {
    if (v.kind != VerdictKind::Check || v.holds) continue;
    ++n;
    std::string w;
    if (v.witness) w = " at (" + fmt(v.witness->a()) + ", " + fmt(v.witness->b()) + ")";
    fail(o, v.relation + " violated by " + fmt(v.worst_violation) + w);
  }
  return n;
}

Outcome chain() {
  setenv("MEANFORGE_THREADS", "1", 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto vs = run_suite("eq2", SampleStrategy{});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  unsetenv("MEANFORGE_THREADS");
  Outcome o;
  o.detail = std::to_string(vs.size()) + " links, 1e6 samples, single thread " + fmt(secs) + " s";
  count_failures(vs, o);
  if (vs.size() != 21) fail(o, "expected 21 links, got " + std::to_string(vs.size()));
  if (secs >= 10) fail(o, "took " + fmt(secs) + " s");
  return o;
}

Outcome identities() {
  Outcome o;
  auto vs = run_suite("identities", SampleStrategy{});
  const auto more = run_suite("remark31", SampleStrategy{});
  vs.insert(vs.end(), more.begin(), more.end());
  double worst_eq = 0;
  for (const Verdict& v : vs) {
    if (parse_relation(v.relation).is_equality()) worst_eq = std::max(worst_eq, v.worst_violation);
  }
  o.detail = std::to_string(vs.size()) + " records, worst equality error " + fmt(worst_eq);
  count_failures(vs, o);
  if (vs.size() != 27) fail(o, "expected 27 records, got " + std::to_string(vs.size()));
  return o;
}

Outcome constants() {
  Outcome o;
  double worst_beta = 0, worst_arg = 0;
  SampleStrategy s;
  s.count = 100000;
  for (const RatioBound& b : theorem31_constants()) {
    const SharpConstant c = sharp_constant(b.spec);
    const double target = b.constant.to_double();
    worst_beta = std::max(worst_beta, std::fabs(c.beta - target));
    worst_arg = std::max(worst_arg, std::fabs(c.argmax - 1));
    if (std::fabs(c.beta - target) > 1e-9) fail(o, b.spec.name() + " beta " + fmt(c.beta));
    if (std::fabs(c.argmax - 1) > 1e-6) fail(o, b.spec.name() + " argmax " + fmt(c.argmax));

    // The same bound with a constant 0.1% smaller must fail, and close to a = b.
    const Rational shrunk = b.constant * Rational(999, 1000);
    const auto& n = b.spec.numerator();
    const auto& d = b.spec.denominator();
    const std::string text = "D(" + std::string(1, symbol(n.upper())) + "," + symbol(n.lower()) +
                             ") <= " + shrunk.str() + "*D(" + symbol(d.upper()) + "," +
                             symbol(d.lower()) + ")";
    const Verdict v = verify_relation(parse_relation(text), s);
    bool refuted_near_one = false;
    for (double x : {1 - 1e-3, 1 + 1e-3}) {
      refuted_near_one = refuted_near_one ||
                         !lemma31_sandwich_check(b.spec, 0.0, shrunk.to_double(), PositivePair(x, 1.0));
    }
    if (v.holds) fail(o, text + " survives sampling");
    if (!refuted_near_one) fail(o, text + " holds at a/b = 1 +- 1e-3");
  }
  if (o.pass) {
    o.detail = "13 specs, worst |beta - bound| " + fmt(worst_beta) + ", worst |argmax - 1| " +
               fmt(worst_arg) + ", all sharp";
  }
  return o;
}

Outcome convexity() {
  Outcome o;
  int convex = 0;
  for (const ConvexityVerdict& v : convexity_certify_all()) {
    const bool known = is_known_nonconvex(v.pair);
    if (v.verdict == Convexity::Convex) {
      ++convex;
      if (known) fail(o, v.pair.name() + " certified convex");
    } else if (!known) {
      fail(o, v.pair.name() + " not convex");
    } else if (!v.witness || difference_curvature(v.pair, NormalizedArg(*v.witness)) >= -1e-10) {
      fail(o, v.pair.name() + " lacks a witness below -1e-10");
    }
  }
  if (convex != 18) fail(o, std::to_string(convex) + " convex pairs");

  double worst_fd = 0;
  double min_order = 1e9, max_order = 0;
  for (const DifferencePair& d : all_difference_pairs()) {
    for (int i = 0; i <= 400; ++i) {
      const double x = 0.1 * std::pow(100.0, i / 400.0);
      const double exact = difference_curvature(d, NormalizedArg(x));
      worst_fd = std::max(worst_fd,
                          std::fabs(finite_difference_curvature(d, NormalizedArg(x), 1e-4) - exact));
    }
    for (double x : {0.5, 1.0, 2.0}) {
      const double exact = difference_curvature(d, NormalizedArg(x));
      const double e1 = std::fabs(finite_difference_curvature(d, NormalizedArg(x), 0.02) - exact);
      const double e2 = std::fabs(finite_difference_curvature(d, NormalizedArg(x), 0.01) - exact);
      if (e1 < 1e-9) continue;
      const double order = std::log2(e1 / e2);
      min_order = std::min(min_order, order);
      max_order = std::max(max_order, order);
    }
  }
  if (worst_fd > 1e-5) fail(o, "finite-difference gap " + fmt(worst_fd));
  // Where the fourth derivative vanishes the h^2 term drops out and the
  // observed order rises to 4; anything below 2 would be a defect.
  if (min_order < 1.8) fail(o, "observed order down to " + fmt(min_order));
  if (o.pass) {
    o.detail = "18 convex, SR NH GH refuted, FD gap " + fmt(worst_fd) + ", observed order " +
               fmt(min_order) + ".." + fmt(max_order);
  }
  return o;
}

Outcome transcription() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logx(std::log(1e-3), std::log(1e3));
  double worst = 0;
  for (const printed::Curvature& p : printed::curvatures()) {
    const DifferencePair d = *difference_from_name(p.name);
    for (int i = 0; i < 1000; ++i) {
      const double x = std::exp(logx(rng));
      const double want = p.f(x);
      const double err = std::fabs(difference_curvature(d, NormalizedArg(x)) - want) / std::fabs(want);
      worst = std::max(worst, err);
      if (err > 1e-12) {
        fail(o, std::string(p.name) + " at " + fmt(x) + " off by " + fmt(err));
        break;
      }
    }
  }
  // RG as printed carries 4 x^(3/2) where the difference has 12 x^(3/2).
  const DifferencePair rg = *difference_from_name("RG");
  double worst_factor = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(logx(rng));
    const double k = printed::rg_as_printed(x) / difference_curvature(rg, NormalizedArg(x));
    worst_factor = std::max(worst_factor, std::fabs(k - 3));
  }
  if (worst_factor > 1e-12) fail(o, "printed RG is not a fixed multiple of the difference");
  if (o.pass) {
    o.detail = "10 formulas, 1000 points each, worst relative error " + fmt(worst) +
               "; RG as printed is exactly 3x (denominator 4 read as 12)";
  }
  return o;
}

Outcome weighted_differences() {
  Outcome o;
  SampleStrategy s;
  s.count = 100000;
  double worst_spread = 0;
  double mean = 0, m2 = 0;
  std::size_t n = 0;
  std::vector<double> block(kBlockSize);
  for (std::size_t b = 0; b < block_count(s); ++b) {
    const std::size_t len = std::min(kBlockSize, s.count - b * kBlockSize);
    fill_block(s, b, std::span<double>(block.data(), len));
    for (std::size_t i = 0; i < len; ++i) {
      const Eq33Values v = eq33_common_value(PositivePair(block[i], 1.0));
      worst_spread = std::max(worst_spread, v.spread);
      if (!v.ratio_to_quartic) continue;
      ++n;
      const double delta = *v.ratio_to_quartic - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (*v.ratio_to_quartic - mean);
    }
  }
  const double stdev = n > 1 ? std::sqrt(m2 / static_cast<double>(n - 1)) : 0.0;
  const auto vs = run_suite("eq33", s);
  count_failures(vs, o);
  if (worst_spread > 1e-10) fail(o, "spread " + fmt(worst_spread));
  if (stdev > 1e-10) fail(o, "ratio stdev " + fmt(stdev));
  if (o.pass) {
    std::ostringstream os;
    os.precision(17);
    os << "spread " << fmt(worst_spread) << ", ratio to (sqrt a - sqrt b)^4/(a+b) = " << mean
       << " (stdev " << fmt(stdev) << "), 1/8 of the printed constant 1";
    o.detail = os.str();
  }
  return o;
}

Outcome long_chain() {
  Outcome o;
  const auto vs = run_suite("prop30", SampleStrategy{});
  int checked = 0;
  for (const Verdict& v : vs) checked += v.kind == VerdictKind::Check;
  const int bad = count_failures(vs, o);
  if (o.pass) o.detail = std::to_string(checked) + " links hold";
  else o.detail = std::to_string(bad) + " of " + std::to_string(checked) + " links fail: " + o.detail;
  return o;
}

Outcome gini() {
  Outcome o;
  struct Case {
    double r, s;
    MeanKind kind;
  };
  const Case cases[] = {{-1, 0, MeanKind::Harmonic},
                        {-0.5, 0.5, MeanKind::Geometric},
                        {0, 1, MeanKind::Arithmetic},
                        {0, 2, MeanKind::RootMeanSquare},
                        {1, 2, MeanKind::ContraHarmonic}};
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> logv(std::log(1e-6), std::log(1e6));
  std::uniform_real_distribution<double> order(-64, 64);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const PositivePair p(std::exp(logv(rng)), std::exp(logv(rng)));
    for (const Case& c : cases) {
      const double want = mean(c.kind, p);
      worst = std::max(worst, std::fabs(gini_mean({c.r, c.s}, p) - want) / want);
    }
  }
  if (worst > 1e-10) fail(o, "special case off by " + fmt(worst));

  int decreasing = 0;
  for (int i = 0; i < 1000; ++i) {
    double r1 = order(rng), r2 = order(rng);
    if (r1 > r2) std::swap(r1, r2);
    const double s = order(rng);
    const PositivePair p(std::exp(logv(rng)), std::exp(logv(rng)));
    if (gini_mean({r1, s}, p) > gini_mean({r2, s}, p) * (1 + 1e-12)) ++decreasing;
  }
  if (decreasing > 0) fail(o, std::to_string(decreasing) + " monotonicity probes fail");

  int overflow = 0;
  for (int i = 0; i < 2000; ++i) {
    const double r = std::round(order(rng) * 2) / 2;
    const double s = std::round(order(rng) * 2) / 2;
    const PositivePair p(std::exp(logv(rng)), std::exp(logv(rng)));
    try {
      const double v = gini_mean({r, s}, p);
      if (!std::isfinite(v) || v < std::min(p.a(), p.b()) * (1 - 1e-12) ||
          v > std::max(p.a(), p.b()) * (1 + 1e-12)) {
        ++overflow;
      }
    } catch (const DomainError&) {
      ++overflow;
    }
  }
  for (double r : {-64.0, 64.0}) {
    for (double s : {-64.0, 64.0}) {
      for (double a : {1e-6, 1e6}) {
        if (!std::isfinite(gini_mean({r, s}, PositivePair(a, 1e6 / a * 1e-6)))) ++overflow;
      }
    }
  }
  if (overflow > 0) fail(o, std::to_string(overflow) + " non-finite or out-of-range values");
  if (o.pass) {
    o.detail = "5 special cases (worst " + fmt(worst) + "), 1000 monotonicity probes, no overflow";
  }
  return o;
}

int cli_status(const std::string& args) {
  const std::string cmd = "'" MEANFORGE_CLI "' " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Outcome language() {
  Outcome o;
  testing_support::ExprGen gen(99);
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const Expr e = gen.any(6);
    try {
      if (!(parse_expr(pretty(e)) == e)) ++mismatches;
    } catch (const std::exception&) {
      ++mismatches;
    }
  }
  if (mismatches > 0) fail(o, std::to_string(mismatches) + " round-trip mismatches");

  std::size_t relations = 0;
  for (const std::string& f : embedded_file_names()) {
    try {
      relations += parse_suite_text(embedded_file(f), f).size();
    } catch (const std::exception& e) {
      fail(o, e.what());
    }
  }

  const std::pair<const char*, int> contract[] = {
      {"verify 'A >= G' --samples 20000", 0},
      {"verify 'G >= A' --samples 20000", 1},
      {"verify 'A >= ' --samples 20000", 2},
      {"verify 'A * G >= A'", 2},
      {"verify --suite identities --samples 20000", 0},
      {"verify --suite nope", 2},
      {"eval N 1 4", 0},
      {"eval A 0 1", 2},
      {"suprema", 0},
      {"convexity", 0},
  };
  for (const auto& [args, want] : contract) {
    const int got = cli_status(args);
    if (got != want) fail(o, std::string("`meanforge ") + args + "` exited " + std::to_string(got));
  }
  if (o.pass) {
    o.detail = "10000 trees round-trip, " + std::to_string(embedded_file_names().size()) +
               " files / " + std::to_string(relations) + " relations parse, " +
               std::to_string(std::size(contract)) + " exit codes as expected";
  }
  return o;
}

struct Criterion {
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"mean chain", chain},
    {"identities", identities},
    {"sharp ratio constants", constants},
    {"convexity", convexity},
    {"printed curvatures", transcription},
    {"weighted W differences", weighted_differences},
    {"long difference chain", long_chain},
    {"Gini family", gini},
    {"relation language", language},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: meanforge_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(std::size(kCriteria))) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all = true;
  for (int n = 1; n <= static_cast<int>(std::size(kCriteria)); ++n) {
    if (only != 0 && n != only) continue;
    Outcome o;
    try {
      o = kCriteria[n - 1].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ' ' << (o.pass ? "PASS" : "FAIL") << ' '
              << kCriteria[n - 1].title << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
