#pragma once

#include <stdexcept>
#include <string>

namespace latentid {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: model constructor arguments, model files, β vectors.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a model file, carrying the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// No observed node is adjacent to the latent node.
class LatentIsolated : public Error {
 public:
  LatentIsolated() : Error("latent node 0 has no observed neighbour") {}
};

/// The configuration falls outside the structural classification.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An operation was requested for a model or set it does not apply to.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// A singular system whose designated coordinates collide.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

/// exp(Zβ) would leave the floating-point range.
class Overflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace latentid
