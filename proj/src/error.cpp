#include "cmlab/error.hpp"

namespace cmlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::NonMonotone: return "NonMonotone";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::Precondition, msg);
}

}  // namespace cmlab
