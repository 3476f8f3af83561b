#include "meanforge/suites.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "meanforge/error.hpp"
#include "suite_files.hpp"

namespace meanforge {

namespace {

struct SuitePart {
  std::string_view file;
  VerdictKind kind;
};

struct SuiteDef {
  std::string_view name;
  std::vector<SuitePart> parts;
};

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {
      {"eq2", {{"eq2.rel", VerdictKind::Check}}},
      {"identities", {{"identities.rel", VerdictKind::Check}}},
      {"theorem31", {{"theorem31.rel", VerdictKind::Check}}},
      {"remark31", {{"remark31.rel", VerdictKind::Check}}},
      {"prop30",
       {{"prop30.rel", VerdictKind::Check}, {"prop30_brace.rel", VerdictKind::Descriptive}}},
      {"pyramids", {{"pyramid.rel", VerdictKind::Check}, {"wpyramid.rel", VerdictKind::Check}}},
      {"eq33", {{"eq33.rel", VerdictKind::Check}}},
  };
  return defs;
}

const SuiteDef& find_suite(std::string_view name) {
  for (const SuiteDef& d : suite_defs()) {
    if (d.name == name) return d;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

Verdict eq33_report(const SampleStrategy& strategy) {
  strategy.validate();
  double worst_spread = 0.0;
  double worst_x = 1.0;
  std::size_t resolved = 0;
  std::vector<double> x(kBlockSize);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t b = 0; b < block_count(strategy); ++b) {
    const std::size_t len = std::min(kBlockSize, strategy.count - b * kBlockSize);
    std::span<double> xs(x.data(), len);
    fill_block(strategy, b, xs);
    for (double xi : xs) {
      const Eq33Values v = eq33_common_value(PositivePair(xi, 1.0));
      if (v.spread > worst_spread) {
        worst_spread = v.spread;
        worst_x = xi;
      }
      if (v.ratio_to_quartic) {
        ++resolved;
        const double r = *v.ratio_to_quartic;
        const double delta = r - mean;
        mean += delta / static_cast<double>(resolved);
        m2 += delta * (r - mean);
      }
    }
  }
  const double stdev = resolved > 1 ? std::sqrt(m2 / static_cast<double>(resolved - 1)) : 0.0;
  Verdict v;
  v.relation = "W-difference spread; common value / ((sqrt(a) - sqrt(b))^4 / (a + b))";
  v.samples = strategy.count;
  v.seed = strategy.seed;
  v.worst_violation = worst_spread;
  v.holds = worst_spread <= 1e-10 && stdev <= 1e-10;
  if (!v.holds) v.witness = PositivePair(worst_x, 1.0);
  std::ostringstream os;
  os << std::setprecision(12) << "spread <= " << worst_spread;
  if (resolved > 0) {
    os << "; ratio_to_quartic = " << mean << " (stdev " << std::setprecision(3) << stdev
       << " over " << resolved << " samples); (sqrt(a) - sqrt(b))^4 / (a + b) is "
       << std::setprecision(6) << 1.0 / mean << " times the common value";
  } else {
    os << "; ratio_to_quartic unresolved (no sample away from a = b)";
  }
  v.note = os.str();
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteDef& d : suite_defs()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

std::string_view embedded_file(std::string_view file) {
  for (const detail::SuiteFile& f : detail::embedded_suite_files()) {
    if (std::string(f.stem) + ".rel" == file) return f.text;
  }
  throw DomainError("no embedded relation file '" + std::string(file) + "'");
}

std::vector<std::string> embedded_file_names() {
  std::vector<std::string> out;
  for (const detail::SuiteFile& f : detail::embedded_suite_files()) {
    out.push_back(std::string(f.stem) + ".rel");
  }
  return out;
}

std::vector<SuiteRelation> parse_suite_text(std::string_view text, std::string_view file,
                                            VerdictKind kind) {
  std::vector<SuiteRelation> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      const std::string source = std::string(file) + ":" + std::to_string(line_no);
      try {
        out.push_back({parse_relation(line), kind, source});
      } catch (const ParseError& e) {
        throw ParseError(source + ": " + e.what(), start + e.offset(), e.expected());
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<SuiteRelation> suite_relations(std::string_view suite) {
  std::vector<SuiteRelation> out;
  for (const SuitePart& part : find_suite(suite).parts) {
    auto rels = parse_suite_text(embedded_file(part.file), part.file, part.kind);
    out.insert(out.end(), rels.begin(), rels.end());
  }
  return out;
}

std::vector<Verdict> run_suite(std::string_view suite, const SampleStrategy& strategy,
                               const Tolerance& tol) {
  const std::vector<SuiteRelation> rels = suite_relations(suite);
  std::vector<Relation> checks;
  for (const SuiteRelation& r : rels) {
    if (r.kind == VerdictKind::Check) checks.push_back(r.relation);
  }
  const std::vector<Verdict> checked = verify_relations(checks, strategy, tol);
  std::vector<Verdict> out;
  std::size_t next = 0;
  for (const SuiteRelation& r : rels) {
    Verdict v = r.kind == VerdictKind::Check ? checked[next++]
                                             : describe_relation(r.relation, strategy, tol);
    v.suite = std::string(suite);
    out.push_back(std::move(v));
  }
  if (suite == "eq33") {
    Verdict v = eq33_report(strategy);
    v.suite = "eq33";
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Verdict> suite_chain_eq2(const SampleStrategy& s, const Tolerance& tol) {
  return run_suite("eq2", s, tol);
}
std::vector<Verdict> suite_identities(const SampleStrategy& s, const Tolerance& tol) {
  return run_suite("identities", s, tol);
}
std::vector<Verdict> suite_theorem31(const SampleStrategy& s, const Tolerance& tol) {
  return run_suite("theorem31", s, tol);
}
std::vector<Verdict> suite_remark31_and_prop(const SampleStrategy& s, const Tolerance& tol) {
  std::vector<Verdict> out = run_suite("remark31", s, tol);
  std::vector<Verdict> prop = run_suite("prop30", s, tol);
  out.insert(out.end(), prop.begin(), prop.end());
  return out;
}
std::vector<Verdict> suite_pyramids(const SampleStrategy& s, const Tolerance& tol) {
  return run_suite("pyramids", s, tol);
}

}  // namespace meanforge
