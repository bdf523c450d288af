#include "hyperent/error.hpp"

namespace hyperent {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::Capacity: return "capacity exceeded";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::Numerical: return "numerical failure";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace hyperent
