#pragma once

#include <stdexcept>
#include <string>

namespace cliffroots {

// Signature rejected (algebra too small, or n above the configured limit).
class UnsupportedSignature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands belong to different algebras.
class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed multivector literal or fixture file.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation is not defined for this input: not a root of -1, wrong ring,
// center too small for Spec, invalid class index and similar.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal cross-check failed. Seeing this means a bug, not bad input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cliffroots
