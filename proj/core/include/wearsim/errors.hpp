#pragma once

#include <stdexcept>
#include <string>

namespace wearsim {

// Error classes map one-to-one onto CLI exit codes so scripted callers can
// distinguish bad input from solver trouble.
enum class ErrorClass {
  InvalidArgument, // precondition violated by caller
  Parse,           // malformed file content
  Geometry,        // scene that cannot be built
  Capacity,        // grid exceeds the configured cell budget
  Numeric,         // solver divergence or degenerate numerics
  Data,            // inconsistent data (unknown tissue, zero density, ...)
};

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, const std::string& msg)
      : std::runtime_error(msg), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

private:
  ErrorClass cls_;
};

class InvalidArgumentError : public Error {
public:
  explicit InvalidArgumentError(const std::string& msg)
      : Error(ErrorClass::InvalidArgument, msg) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& file, int line, const std::string& msg)
      : Error(ErrorClass::Parse, file + ":" + std::to_string(line) + ": " + msg),
        file_(file), line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

private:
  std::string file_;
  int line_;
};

class GeometryError : public Error {
public:
  explicit GeometryError(const std::string& msg)
      : Error(ErrorClass::Geometry, msg) {}
};

class CapacityError : public Error {
public:
  CapacityError(std::size_t required_cells, std::size_t budget)
      : Error(ErrorClass::Capacity,
              "grid requires " + std::to_string(required_cells) +
                  " cells, exceeding the budget of " + std::to_string(budget)),
        required_cells_(required_cells) {}
  std::size_t required_cells() const { return required_cells_; }

private:
  std::size_t required_cells_;
};

class NumericError : public Error {
public:
  explicit NumericError(const std::string& msg)
      : Error(ErrorClass::Numeric, msg) {}
};

class DataError : public Error {
public:
  explicit DataError(const std::string& msg) : Error(ErrorClass::Data, msg) {}
};

} // namespace wearsim
