#pragma once

#include <stdexcept>
#include <string>

namespace zdl {

enum class ErrorKind {
  validation,          // bad input or violated precondition
  pole,                // evaluation at a pole
  division,            // a denominator vanished (e.g. omega = 0)
  precision,           // requested tolerance could not be certified
  method_disagreement, // two exact evaluators disagree
  audit,               // AFE vs exact audit failed inside a quadrature
  budget,              // term / pair budget exceeded
  convergence,         // iterative procedure did not settle
  enumeration,         // winding counts failed to reconcile
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  // process exit code used by the CLI
  int exit_code() const noexcept;

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::validation, what);
}

}  // namespace zdl
