#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctensor {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero expression") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : Error("unknown symbol '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Evaluation hit a zero denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(const std::string& name)
      : Error("symbol '" + name + "' is not bound"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("column " + std::to_string(position + 1) + ": " + message),
        position_(position),
        message_(message) {}
  /// Zero-based offset into the parsed text.
  std::size_t position() const { return position_; }
  const std::string& detail() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested computation is outside what the engine supports for this input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace ctensor
