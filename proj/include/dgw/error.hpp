#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgw {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad file, bad table, bad arguments).
/// The command-line tool maps this to exit status 1.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based source line, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation could not be carried out on valid input.
/// The command-line tool maps this to exit status 2.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// A structural property that the mathematics guarantees turned out to be
/// false (for instance a prefix product leaving H).  Always indicates either
/// an upstream bug or input that does not satisfy the axioms.
class StructuralError : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// Knuth–Bendix completion hit its rule cap; equality in the presented
/// groupoid could not be decided.
class WordProblemUnresolved : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

}  // namespace dgw
