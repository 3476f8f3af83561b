#pragma once

// Named collections of relations, stored as embedded relation files (one
// relation per line, '#' starts a comment).

#include <string>
#include <string_view>
#include <vector>

#include "meanforge/engine.hpp"

namespace meanforge {

struct SuiteRelation {
  Relation relation;
  VerdictKind kind;
  std::string source;  // "file.rel:line"
};

/// eq2, identities, theorem31, remark31, prop30, pyramids, eq33.
const std::vector<std::string>& suite_names();

/// Relations of a suite in file order. Throws DomainError for an unknown name.
std::vector<SuiteRelation> suite_relations(std::string_view suite);

/// Parses relation-file text. A ParseError names `file` and the line, and its
/// offset is the byte offset into `text`.
std::vector<SuiteRelation> parse_suite_text(std::string_view text, std::string_view file,
                                            VerdictKind kind = VerdictKind::Check);

/// Raw text of an embedded relation file, e.g. "eq2.rel".
std::string_view embedded_file(std::string_view file);
std::vector<std::string> embedded_file_names();

/// Runs every relation of the suite. The eq33 suite appends one verdict for
/// the mutual spread of the ten weighted differences and the measured ratio
/// of their common value to (sqrt(a) - sqrt(b))^4 / (a + b).
std::vector<Verdict> run_suite(std::string_view suite, const SampleStrategy& strategy,
                               const Tolerance& tol = {});

std::vector<Verdict> suite_chain_eq2(const SampleStrategy& s, const Tolerance& tol = {});
std::vector<Verdict> suite_identities(const SampleStrategy& s, const Tolerance& tol = {});
std::vector<Verdict> suite_theorem31(const SampleStrategy& s, const Tolerance& tol = {});
/// remark31 followed by prop30.
std::vector<Verdict> suite_remark31_and_prop(const SampleStrategy& s, const Tolerance& tol = {});
std::vector<Verdict> suite_pyramids(const SampleStrategy& s, const Tolerance& tol = {});

}  // namespace meanforge
