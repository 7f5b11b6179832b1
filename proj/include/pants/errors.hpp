#pragma once
#include <stdexcept>
#include <string>

namespace pants {

// Error taxonomy mirrored by the CLI exit codes:
//   0 pass, 1 check failure, 2 input error, 3 budget exhausted.
enum class ErrorKind {
  Input,        // malformed or out-of-contract input
  CheckFailure, // a verification predicate failed
  Budget,       // configured enumeration/search budget exceeded
  Unsupported,  // combination excluded by the theory (not a bug)
  Overflow,     // exact arithmetic left the fixed-width range
  Internal,     // broken invariant; always a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& m) : Error(ErrorKind::Input, m) {}
};
struct CheckFailure : Error {
  explicit CheckFailure(const std::string& m) : Error(ErrorKind::CheckFailure, m) {}
};
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error(ErrorKind::Budget, m) {}
};
struct UnsupportedCombination : Error {
  explicit UnsupportedCombination(const std::string& m) : Error(ErrorKind::Unsupported, m) {}
};
struct OverflowError : Error {
  explicit OverflowError(const std::string& m) : Error(ErrorKind::Overflow, m) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error(ErrorKind::Internal, m) {}
};
// Raised when a cutting schedule is requested for a graph without a
// one-edge loop: the procedure's hypothesis, not an implementation bug.
struct NoOneEdgeLoop : Error {
  explicit NoOneEdgeLoop(const std::string& m) : Error(ErrorKind::Unsupported, m) {}
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::CheckFailure: return 1;
    case ErrorKind::Budget: return 3;
    case ErrorKind::Input:
    case ErrorKind::Unsupported:
    case ErrorKind::Overflow:
    case ErrorKind::Internal: return 2;
  }
  return 2;
}

} // namespace pants
