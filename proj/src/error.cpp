#include "spincomb/error.hpp"

namespace spincomb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::WrongValency: return "WrongValency";
    case ErrorKind::LoopVertex: return "LoopVertex";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::VanishingComponent: return "VanishingComponent";
    case ErrorKind::NotSuperstable: return "NotSuperstable";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InternalLengthMismatch: return "InternalLengthMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::DuplicateName: return "DuplicateName";
  }
  return "Unknown";
}

}  // namespace spincomb
