#ifndef DEFBOSE_ERROR_HPP
#define DEFBOSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace defbose {

enum class ErrorKind {
  MixedBackend,
  DivisionByZero,
  UnboundVariable,
  BackendUnsupported,
  NonzeroConstantTerm,
  ZeroLinearCoefficient,
  UnsupportedOrder,
  DomainError,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MixedBackend: return "MixedBackend";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::BackendUnsupported: return "BackendUnsupported";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ZeroLinearCoefficient: return "ZeroLinearCoefficient";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace defbose

#endif  // DEFBOSE_ERROR_HPP
