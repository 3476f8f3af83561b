#include "report.hpp"

#include <charconv>
#include <iomanip>

#include <json.hpp>

namespace meanforge::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string holds_text(const Verdict& v) {
  if (v.kind == VerdictKind::Descriptive) return "-";
  return v.holds ? "yes" : "NO";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_verdicts(std::ostream& os, const std::vector<Verdict>& verdicts, Format format) {
  switch (format) {
    case Format::Json:
      for (const Verdict& v : verdicts) {
        Json j;
        j["suite"] = v.suite;
        j["relation"] = v.relation;
        j["holds"] = v.kind == VerdictKind::Check ? Json(v.holds) : Json(nullptr);
        j["worst_violation"] = v.worst_violation;
        j["witness"] = v.witness ? Json{{"a", v.witness->a()}, {"b", v.witness->b()}} : Json(nullptr);
        j["tight_at"] = optional_number(v.tight_at);
        j["samples"] = v.samples;
        j["seed"] = v.seed;
        j["note"] = v.note;
        os << j.dump() << '\n';
      }
      return;
    case Format::Csv:
      os << "suite,relation,holds,worst_violation,witness_a,witness_b,tight_at\n";
      for (const Verdict& v : verdicts) {
        os << csv_field(v.suite) << ',' << csv_field(v.relation) << ','
           << (v.kind == VerdictKind::Check ? (v.holds ? "true" : "false") : "") << ','
           << number(v.worst_violation) << ',' << (v.witness ? number(v.witness->a()) : "")
           << ',' << (v.witness ? number(v.witness->b()) : "") << ','
           << (v.tight_at ? number(*v.tight_at) : "") << '\n';
      }
      return;
    case Format::Table: {
      std::size_t width = 8;
      for (const Verdict& v : verdicts) width = std::max(width, v.relation.size());
      width = std::min<std::size_t>(width, 72);
      os << pad("relation", width) << "  holds  worst_violation  tight_at\n";
      for (const Verdict& v : verdicts) {
        os << pad(v.relation, width) << "  " << pad(holds_text(v), 5) << "  "
           << pad(number(v.worst_violation), 15) << "  " << (v.tight_at ? number(*v.tight_at) : "-")
           << '\n';
        if (v.witness) {
          os << "    witness a = " << number(v.witness->a()) << ", b = " << number(v.witness->b())
             << '\n';
        }
        if (!v.note.empty()) os << "    " << v.note << '\n';
      }
      return;
    }
  }
}

void write_suprema(std::ostream& os, const std::vector<SupremumRow>& rows, Format format) {
  switch (format) {
    case Format::Json:
      for (const SupremumRow& r : rows) {
        Json j;
        j["spec"] = r.bound.spec.name();
        j["beta_bound"] = r.bound.constant.str();
        j["beta_measured"] = r.measured.beta;
        j["argmax"] = r.measured.argmax;
        j["unimodal"] = r.measured.unimodal;
        j["curvature_sup"] = r.measured.curvature_sup.value;
        j["curvature_argmax"] = r.measured.curvature_sup.argmax;
        j["curvature_unimodal"] = r.measured.curvature_sup.unimodal;
        j["matches"] = r.matches;
        os << j.dump() << '\n';
      }
      return;
    case Format::Csv:
      os << "spec,beta_bound,beta_measured,argmax,unimodal,curvature_sup,curvature_argmax,"
            "curvature_unimodal,matches\n";
      for (const SupremumRow& r : rows) {
        os << r.bound.spec.name() << ',' << r.bound.constant.str() << ','
           << number(r.measured.beta) << ',' << number(r.measured.argmax) << ','
           << (r.measured.unimodal ? "true" : "false") << ','
           << number(r.measured.curvature_sup.value) << ','
           << number(r.measured.curvature_sup.argmax) << ','
           << (r.measured.curvature_sup.unimodal ? "true" : "false") << ','
           << (r.matches ? "true" : "false") << '\n';
      }
      return;
    case Format::Table:
      os << "spec    beta_bound  beta_measured        argmax               unimodal  "
            "curvature_sup\n";
      for (const SupremumRow& r : rows) {
        os << pad(r.bound.spec.name(), 8) << pad(r.bound.constant.str(), 12)
           << pad(number(r.measured.beta), 21) << pad(number(r.measured.argmax), 21)
           << pad(r.measured.unimodal ? "yes" : "no", 10)
           << number(r.measured.curvature_sup.value) << (r.matches ? "" : "  MISMATCH") << '\n';
      }
      return;
  }
}

void write_convexity(std::ostream& os, const std::vector<ConvexityVerdict>& rows, Format format) {
  auto verdict = [](const ConvexityVerdict& v) {
    return v.verdict == Convexity::Convex ? "Convex" : "NotConvex";
  };
  switch (format) {
    case Format::Json:
      for (const ConvexityVerdict& v : rows) {
        Json j;
        j["pair"] = v.pair.name();
        j["verdict"] = verdict(v);
        j["witness"] = optional_number(v.witness);
        j["min_curvature"] = v.min_curvature;
        j["min_curvature_at"] = v.min_curvature_at;
        os << j.dump() << '\n';
      }
      return;
    case Format::Csv:
      os << "pair,verdict,witness,min_curvature,min_curvature_at\n";
      for (const ConvexityVerdict& v : rows) {
        os << v.pair.name() << ',' << verdict(v) << ',' << (v.witness ? number(*v.witness) : "")
           << ',' << number(v.min_curvature) << ',' << number(v.min_curvature_at) << '\n';
      }
      return;
    case Format::Table:
      os << "pair  verdict    witness                min_curvature\n";
      for (const ConvexityVerdict& v : rows) {
        os << pad(v.pair.name(), 6) << pad(verdict(v), 11)
           << pad(v.witness ? number(*v.witness) : "-", 23) << number(v.min_curvature) << '\n';
      }
      return;
  }
}

void write_values(std::ostream& os, const std::vector<NamedValue>& values, double a, double b,
                  Format format) {
  switch (format) {
    case Format::Json:
      for (const NamedValue& v : values) {
        Json j;
        j["expression"] = v.name;
        j["a"] = a;
        j["b"] = b;
        j["value"] = v.value;
        os << j.dump() << '\n';
      }
      return;
    case Format::Csv:
      os << "expression,a,b,value\n";
      for (const NamedValue& v : values) {
        os << csv_field(v.name) << ',' << number(a) << ',' << number(b) << ',' << number(v.value)
           << '\n';
      }
      return;
    case Format::Table:
      if (values.size() == 1) {
        os << number(values.front().value) << '\n';
        return;
      }
      for (const NamedValue& v : values) os << pad(v.name, 8) << number(v.value) << '\n';
      return;
  }
}

}  // namespace meanforge::cli
