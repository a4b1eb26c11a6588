#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqdim {

enum class ErrorKind {
  UnknownVertex,
  DuplicateVertex,
  SelfLoop,
  Disconnected,
  EmptyGraph,
  SizeCapExceeded,
  SameVertex,
  NTooSmall,
  ParityMismatch,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` tells callers what went wrong,
/// the message names the offending element.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eqdim
