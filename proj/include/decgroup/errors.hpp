#ifndef DECGROUP_ERRORS_HPP
#define DECGROUP_ERRORS_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace decgroup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings of different arity (or incompatible orders).
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional() : Error("ideal is not zero-dimensional") {}
};

/// The ideal is <1>; its variety is empty.
class UnitIdeal : public Error {
 public:
  UnitIdeal() : Error("ideal is the unit ideal (empty variety)") {}
};

class NotRadical : public Error {
 public:
  NotRadical() : Error("ideal is not radical") {}
};

/// Quotient dimension above the symbolic characteristic-polynomial cutoff.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// A permutation block too large to enumerate explicitly.
class EnumerationCapExceeded : public Error {
 public:
  using Error::Error;
};

class ContainmentFailure : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  using Error::Error;
};

/// Cooperative deadline polled by long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check(const std::string& context) const {
    if (expired()) throw Timeout("deadline exceeded: " + context);
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace decgroup

#endif  // DECGROUP_ERRORS_HPP
