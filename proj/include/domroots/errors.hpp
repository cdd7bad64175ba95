#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domroots {

/// Malformed textual input (graph6, rationals, family specs).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size limit (vertex cap, brute-force cap, enumeration cap) was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A Sturm count was requested at an endpoint that is itself a root.
class EndpointIsRoot : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal consistency check failed (two algorithms disagree, etc.).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domroots
