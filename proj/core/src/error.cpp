#include "matchbound/error.hpp"

namespace matchbound {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::SharedVertex: return "SharedVertex";
    case ErrorKind::NotMatched: return "NotMatched";
    case ErrorKind::StaleMove: return "StaleMove";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

MatchboundError::MatchboundError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + detail), kind_(kind) {}

}  // namespace matchbound
