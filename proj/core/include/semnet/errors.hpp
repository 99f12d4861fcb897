#ifndef SEMNET_ERRORS_HPP
#define SEMNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semnet {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input content (bad JSON, missing fields, unparseable values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally well-formed input that violates a network or config
/// invariant (cycle, multiple roots, dangling edge, negative weight, ...).
/// The message names the offending element.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace semnet

#endif  // SEMNET_ERRORS_HPP
