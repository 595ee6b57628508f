#include "zdl/errors.hpp"

namespace zdl {

int Error::exit_code() const noexcept {
  switch (kind_) {
    case ErrorKind::validation:
      return 2;
    case ErrorKind::budget:
      return 4;
    default:
      return 3;
  }
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::pole: return "pole";
    case ErrorKind::division: return "division";
    case ErrorKind::precision: return "precision";
    case ErrorKind::method_disagreement: return "method-disagreement";
    case ErrorKind::audit: return "audit";
    case ErrorKind::budget: return "budget";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::enumeration: return "enumeration";
  }
  return "unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + " error: " + what);
}

}  // namespace zdl
