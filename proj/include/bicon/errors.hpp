#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bicon {

enum class ErrorKind {
  IndexOutOfRange,
  DuplicateEdge,
  EmptyPart,
  EmptyGraph,
  TooSmall,
  TooLarge,
  BadSubset,
  PreconditionViolated,
  NoWitness,
  InvalidTriple,
  InvalidArgument,
  UnknownTheorem,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::EmptyPart: return "EmptyPart";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-readable kind so the
// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bicon
