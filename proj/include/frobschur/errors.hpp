#pragma once

#include <stdexcept>
#include <string>

namespace frobschur {

/// Malformed textual input (partition, sequence, rational, point).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A custom parameter window was read outside its explicit bounds in strict mode.
class WindowExceeded : public std::out_of_range {
 public:
  explicit WindowExceeded(long index)
      : std::out_of_range("parameter window exceeded at index " + std::to_string(index)),
        index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// The data makes the requested computation ill-defined (coincident
/// interpolation nodes, repeated Vandermonde coordinates).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace frobschur
