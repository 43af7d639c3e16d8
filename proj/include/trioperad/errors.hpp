#pragma once

#include <stdexcept>
#include <string>

namespace trioperad {

/// Thrown when an operation is called outside its domain (bad arity, empty
/// argument list, leaf index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown by the text-format parsers. The message names the offending token
/// and the grammar that was expected.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace trioperad
