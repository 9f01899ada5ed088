#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spincomb {

enum class ErrorKind {
  BadIndex,
  IsolatedVertex,
  EmptyGraph,
  WidthMismatch,
  CapExceeded,
  NotCyclic,
  WrongValency,
  LoopVertex,
  NotSeparating,
  VanishingComponent,
  NotSuperstable,
  Disconnected,
  NotEven,
  PreconditionFailed,
  InternalLengthMismatch,
  TooLarge,
  ParseError,
  UnknownVertex,
  DuplicateName,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace spincomb
