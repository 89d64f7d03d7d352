#include "sigample/error.hpp"

namespace sigample {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotInvertibleOverIntegers: return "NotInvertibleOverIntegers";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::NotQuasiUnipotent: return "NotQuasiUnipotent";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::MissingToddData: return "MissingToddData";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace sigample
