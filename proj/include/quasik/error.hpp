#pragma once

#include <stdexcept>
#include <string>

namespace quasik {

/// Malformed user input: bad JSON, wrong field types, inconsistent generators.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale limit was hit. `cap()` names the limit.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, const std::string& what)
      : std::runtime_error(what), cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// An internal invariant failed. Never caused by user input alone.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quasik
