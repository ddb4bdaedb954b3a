#pragma once

#include <stdexcept>
#include <string>

namespace posetlogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The supplied relation contains a cycle, so it is not a strict order.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// An element index is outside 0..n-1.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// The input exceeds a configured enumeration or size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// An operation that presupposes an orthoclosed set received another set.
class NotOrthoclosedError : public Error {
 public:
  using Error::Error;
};

/// Malformed poset file. `line()` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind { kSyntax, kUnknownElement };

  ParseError(Kind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Size caps shared by the enumeration-heavy operations. Every field can be
/// overridden from the command line.
struct Limits {
  int max_poset_elements = 24;
  /// Orthosets larger than this are refused by closed-set enumeration and by
  /// the Dacey and compatibility checks.
  int max_closed_elements = 20;
  std::size_t max_family = std::size_t{1} << 20;
  std::size_t max_lattice = 4096;
  /// Largest n accepted by labeled poset enumeration and the census.
  int max_census_n = 6;
};

}  // namespace posetlogic
