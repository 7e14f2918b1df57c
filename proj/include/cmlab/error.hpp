#pragma once

#include <stdexcept>
#include <string>

namespace cmlab {

enum class ErrorKind {
  Precondition,
  NonMonotone,
  NonPositive,
  NotAdmissible,
  NonFinite,
  DivideByZero,
  Format,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws Error{Precondition} with `msg` when `cond` is false.
void require(bool cond, const std::string& msg);

}  // namespace cmlab
