#pragma once

#include <stdexcept>
#include <string>

namespace cosdyn {

/// Malformed input text (bad JSON, non-finite numbers, wrong shapes).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain invariant. The message names the
/// offending field.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Raised by build_witness when a restricted measure carries no mass, so the
/// scaling factor is undefined.
class DegenerateWitness : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosdyn
