// meanforge: evaluate means, verify relation suites, measure sharp constants
// and certify convexity from the command line.
//
// Exit status: 0 when everything holds, 1 on a mathematical violation,
// 2 on a usage or parse error.

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "meanforge/curvature.hpp"
#include "meanforge/dsl.hpp"
#include "meanforge/engine.hpp"
#include "meanforge/error.hpp"
#include "meanforge/ratio_bounds.hpp"
#include "meanforge/suites.hpp"
#include "report.hpp"

namespace mf = meanforge;
using mf::cli::Format;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Config {
  std::size_t samples = 1'000'000;
  std::string range = "1e-6:1e6";
  std::uint64_t seed = 42;
  double tol_rel = 1e-10;
  double tol_abs = 1e-14;
  Format format = Format::Table;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

mf::SampleStrategy strategy_of(const Config& c) {
  mf::SampleStrategy s;
  s.count = c.samples;
  s.seed = c.seed;
  const std::size_t colon = c.range.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects LO:HI");
  s.lo = parse_double(c.range.substr(0, colon), "range bound");
  s.hi = parse_double(c.range.substr(colon + 1), "range bound");
  try {
    s.validate();
  } catch (const mf::DomainError& e) {
    throw UsageError(e.what());
  }
  return s;
}

mf::Tolerance tolerance_of(const Config& c) {
  if (!(c.tol_rel > 0.0) || !(c.tol_abs >= 0.0)) {
    throw UsageError("tolerances must be positive");
  }
  mf::Tolerance t;
  t.rel = c.tol_rel;
  t.abs = c.tol_abs;
  return t;
}

void add_format(CLI::App* cmd, Config& c) {
  const std::map<std::string, Format> formats = {
      {"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  cmd->add_option("--format", c.format, "Output format: table, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->option_text("table|json|csv");
}

void add_sampling(CLI::App* cmd, Config& c) {
  cmd->add_option("--samples", c.samples, "Number of sampled ratios x = a/b");
  cmd->add_option("--range", c.range, "Sampling range LO:HI for x");
  cmd->add_option("--seed", c.seed, "Generator seed");
  cmd->add_option("--tol-rel", c.tol_rel, "Relative tolerance for inequalities");
  cmd->add_option("--tol-abs", c.tol_abs, "Absolute tolerance floor");
}

void report_parse_error(const std::string& text, const mf::ParseError& e) {
  std::cerr << "parse error: " << e.what() << '\n';
  std::cerr << "  " << text << '\n';
  std::cerr << "  " << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
  if (!e.expected().empty()) {
    std::cerr << "  expected one of:";
    for (const std::string& x : e.expected()) std::cerr << ' ' << x;
    std::cerr << '\n';
  }
}

int run_eval(const std::string& text, const std::string& a_text, const std::string& b_text,
             bool all_means, const Config& c) {
  const double a = parse_double(a_text, "a");
  const double b = parse_double(b_text, "b");
  std::optional<mf::PositivePair> p;
  try {
    p.emplace(a, b);
  } catch (const mf::DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<mf::cli::NamedValue> values;
  if (!text.empty()) {
    const mf::Expr e = mf::parse_expr(text);
    values.push_back({mf::pretty(e), mf::evaluate(e, *p)});
  }
  if (all_means) {
    for (mf::MeanKind k : mf::kAllMeans) {
      values.push_back({std::string(1, mf::symbol(k)), mf::mean(k, *p)});
    }
    values.push_back({"Delta", mf::triangular_discrimination(*p)});
    values.push_back({"hel", mf::hellinger(*p)});
  }
  if (values.empty()) throw UsageError("eval needs an expression or --all-means");
  mf::cli::write_values(std::cout, values, a, b, c.format);
  return kPass;
}

int run_verify(const std::string& text, const std::string& suite, const Config& c) {
  if (text.empty() == suite.empty()) {
    throw UsageError("verify takes exactly one of a relation or --suite NAME");
  }
  const mf::SampleStrategy s = strategy_of(c);
  const mf::Tolerance tol = tolerance_of(c);
  std::vector<mf::Verdict> verdicts;
  if (!suite.empty()) {
    const auto& names = mf::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw UsageError("unknown suite '" + suite + "'");
    }
    verdicts = mf::run_suite(suite, s, tol);
  } else {
    mf::Verdict v = mf::verify_relation(mf::parse_relation(text), s, tol);
    v.suite = "cli";
    verdicts.push_back(std::move(v));
  }
  mf::cli::write_verdicts(std::cout, verdicts, c.format);
  for (const mf::Verdict& v : verdicts) {
    if (v.kind == mf::VerdictKind::Check && !v.holds) {
      std::cerr << "violation: " << v.relation;
      if (v.witness) {
        std::cerr << " at a = " << mf::cli::number(v.witness->a())
                  << ", b = " << mf::cli::number(v.witness->b());
      }
      std::cerr << '\n';
      return kViolation;
    }
  }
  return kPass;
}

int run_suprema(const Config& c) {
  std::vector<mf::cli::SupremumRow> rows;
  bool ok = true;
  for (const mf::RatioBound& b : mf::theorem31_constants()) {
    const mf::SharpConstant sc = mf::sharp_constant(b.spec);
    const bool matches = std::fabs(sc.beta - b.constant.to_double()) <= 1e-9;
    ok = ok && matches;
    rows.push_back({b, sc, matches});
  }
  mf::cli::write_suprema(std::cout, rows, c.format);
  return ok ? kPass : kViolation;
}

int run_convexity(const Config& c) {
  const std::vector<mf::ConvexityVerdict> rows = mf::convexity_certify_all();
  bool ok = true;
  for (const mf::ConvexityVerdict& v : rows) {
    const bool expect_convex = !mf::is_known_nonconvex(v.pair);
    ok = ok && (v.verdict == mf::Convexity::Convex) == expect_convex;
  }
  mf::cli::write_convexity(std::cout, rows, c.format);
  return ok ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Means, their differences, and the inequalities between them"};
  app.require_subcommand(1);
  Config config;

  std::vector<std::string> eval_args;
  std::string eval_text;
  bool all_means = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression at (a, b)");
  eval->add_option("args", eval_args, "[EXPRESSION] A B, e.g. \"2*A + G\" 4 9")
      ->expected(2, 3)
      ->required();
  eval->add_flag("--all-means", all_means, "Also print the seven means, Delta and hel");
  add_format(eval, config);

  std::string verify_text;
  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Verify a relation or a named suite");
  verify->add_option("relation", verify_text, "Relation, e.g. \"A >= G\"");
  verify->add_option("--suite", suite, "Suite name");
  add_sampling(verify, config);
  add_format(verify, config);

  CLI::App* suprema = app.add_subcommand("suprema", "Measure the thirteen sharp constants");
  add_format(suprema, config);

  CLI::App* convexity = app.add_subcommand("convexity", "Certify convexity of the 21 differences");
  add_format(convexity, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) {
      if (eval_args.size() == 3) eval_text = eval_args[0];
      const std::size_t n = eval_args.size();
      return run_eval(eval_text, eval_args[n - 2], eval_args[n - 1], all_means, config);
    }
    if (*verify) return run_verify(verify_text, suite, config);
    if (*suprema) return run_suprema(config);
    if (*convexity) return run_convexity(config);
  } catch (const mf::ParseError& e) {
    report_parse_error(*eval ? eval_text : verify_text, e);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const mf::DomainError& e) {
    std::cerr << "evaluation error: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
