#include "barlat/error.hpp"

namespace barlat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidBar: return "InvalidBar";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidScale: return "InvalidScale";
    case ErrorKind::InvalidQ: return "InvalidQ";
    case ErrorKind::NotStrict: return "NotStrict";
    case ErrorKind::NotKStrict: return "NotKStrict";
    case ErrorKind::NotCanonical: return "NotCanonical";
    case ErrorKind::NotAnElement: return "NotAnElement";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateBar: return "DegenerateBar";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace barlat
