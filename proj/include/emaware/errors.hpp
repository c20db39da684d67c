#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emaware {

// Each error family maps onto one CLI exit code (see tools/emaware.cpp).

/// Invalid run configuration, generator spec or structure geometry.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent trace input. `line()` is 1-based, 0 when unknown.
class TraceParseError : public std::runtime_error {
  public:
    TraceParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// A reliability-model precondition was violated (non-positive J, ratio out of range, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

} // namespace emaware
