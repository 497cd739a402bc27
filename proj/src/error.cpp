#include "infinitary/error.hpp"

namespace infinitary {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::SignatureTooLarge: return "SignatureTooLarge";
    case ErrorCode::AtomLimitExceeded: return "AtomLimitExceeded";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotTautological: return "NotTautological";
    case ErrorCode::UnknownTheoremName: return "UnknownTheoremName";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::NoConstants: return "NoConstants";
    case ErrorCode::UnsafeVariable: return "UnsafeVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IOError: return "IOError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace infinitary
