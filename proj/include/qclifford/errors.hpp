#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcl {

// Input-side failures (malformed data, wrong shapes, limits). The CLI maps
// these to exit code 2; everything else deriving from ComputeError maps to 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionLimitError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ContextMismatch : public ComputeError {
 public:
  ContextMismatch() : ComputeError("operands belong to different algebra contexts") {}
};

// g is singular, so no bivector F with A(x,y) = F _|g (x^y) exists.
class DegenerateFormError : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class NotIdempotentError : public ComputeError {
 public:
  NotIdempotentError() : ComputeError("element is not idempotent") {}
};

}  // namespace qcl
