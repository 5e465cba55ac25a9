#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppfun {

/// Base class of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegeneratePairing : public Error {
 public:
  using Error::Error;
};

class AlgebraError : public Error {
 public:
  using Error::Error;
};

/// Algebra, side or module mismatch between operands.
class Mismatch : public Error {
 public:
  using Error::Error;
};

class ModuleError : public Error {
 public:
  using Error::Error;
};

class NoRadicalKnown : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotAPair : public Error {
 public:
  using Error::Error;
};

class CheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppfun
