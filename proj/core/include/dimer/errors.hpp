#pragma once

#include <stdexcept>
#include <string>

namespace dimer {

// Bad user input. The CLI maps every InputError to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& msg)
      : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Rotation system does not describe a cellular map on the torus.
class TopologyError : public InputError {
 public:
  using InputError::InputError;
};

// Structural problem: colours, connectivity, incidence.
class ModelError : public InputError {
 public:
  using InputError::InputError;
};

// A check was asked of data that does not satisfy its precondition,
// e.g. resonating along a path the matching does not cover.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dimer
