#include "meanforge/error.hpp"

namespace meanforge {

ParseError::ParseError(const std::string& message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error(message), offset_(offset), expected_(std::move(expected)) {}

}  // namespace meanforge
