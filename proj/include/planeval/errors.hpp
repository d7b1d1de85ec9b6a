#pragma once

#include <stdexcept>
#include <string>

namespace planeval {

// Malformed input text (files, numbers, command arguments). CLI exit code 2.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Structurally well-formed input that violates a legality rule. CLI exit code 3.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Valid input outside the domain of the requested operation. CLI exit code 4.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// Input the implementation cannot decide within its stated limits. CLI exit code 5.
struct CapabilityError : std::runtime_error {
  explicit CapabilityError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace planeval
