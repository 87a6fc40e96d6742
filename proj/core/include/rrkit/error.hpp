#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rrkit {

/// A mathematically meaningful refusal: degenerate parameters, reducible
/// curves, unsupported places. Maps to exit code 1 in the CLI.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the byte offset of the offending token
/// and the set of tokens that would have been accepted there.
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

/// A self-check failed (a theorem that must hold exactly did not).
/// Always a bug in this library, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rrkit
