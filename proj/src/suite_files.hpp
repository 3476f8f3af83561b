#pragma once

#include <string_view>
#include <vector>

namespace meanforge::detail {

struct SuiteFile {
  std::string_view stem;
  std::string_view text;
};

/// Contents of suites/*.rel, embedded at build time.
const std::vector<SuiteFile>& embedded_suite_files();

}  // namespace meanforge::detail
