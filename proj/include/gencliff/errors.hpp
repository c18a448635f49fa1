#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gencliff {

/// An (m, d) request exceeds the configured size limits, or a parameter is
/// outside its admissible range.
class SizeLimitError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands belong to different algebras.
class ContextMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// inverse() refused to divide by a determinant below the singularity
/// threshold. Carries the offending |Det|.
class SingularElementError : public std::runtime_error {
public:
  SingularElementError(const std::string& what, double det_magnitude)
      : std::runtime_error(what), det_magnitude_(det_magnitude) {}

  double det_magnitude() const noexcept { return det_magnitude_; }

private:
  double det_magnitude_;
};

/// Lexing or parsing failure; position is the byte offset into the source.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

}  // namespace gencliff
