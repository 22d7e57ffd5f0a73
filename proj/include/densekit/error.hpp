#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace densekit {

// Bad input data or arguments. The CLI maps these to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyGraphError : public InputError {
 public:
  EmptyGraphError() : InputError("graph has no edges") {}
};

class UndefinedDensityError : public InputError {
 public:
  UndefinedDensityError() : InputError("density of an empty vertex set is undefined") {}
};

// A solver declined to run on an otherwise valid input (signed graph handed
// to the exact solver, instance beyond the brute-force guard, ...). The CLI
// maps these to exit status 2.
class SolverRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace densekit
