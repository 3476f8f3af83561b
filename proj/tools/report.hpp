#pragma once

// Table, JSON-lines and CSV rendering for the command-line tool.

#include <ostream>
#include <string>
#include <vector>

#include "meanforge/curvature.hpp"
#include "meanforge/engine.hpp"
#include "meanforge/ratio_bounds.hpp"

namespace meanforge::cli {

enum class Format { Table, Json, Csv };

/// Shortest decimal text that reads back to the same double.
std::string number(double v);

void write_verdicts(std::ostream& os, const std::vector<Verdict>& verdicts, Format format);

struct SupremumRow {
  RatioBound bound;
  SharpConstant measured;
  bool matches;
};

void write_suprema(std::ostream& os, const std::vector<SupremumRow>& rows, Format format);

void write_convexity(std::ostream& os, const std::vector<ConvexityVerdict>& rows, Format format);

struct NamedValue {
  std::string name;
  double value;
};

void write_values(std::ostream& os, const std::vector<NamedValue>& values, double a, double b,
                  Format format);

}  // namespace meanforge::cli
