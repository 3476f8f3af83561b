#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace meanforge {

/// Raised when an input lies outside a function's domain or an evaluation
/// produces a non-finite value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the relation language. `offset` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<std::string> expected = {});

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace meanforge
