#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchbound {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  InvalidParameter,
  NotAnEdge,
  SharedVertex,
  NotMatched,
  StaleMove,
  InstanceTooLarge,
  NotMaximal,
  SyntaxError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library is a MatchboundError. The message is
// prefixed with the kind name, e.g. "LoopEdge(3)".
class MatchboundError : public std::runtime_error {
 public:
  MatchboundError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace matchbound
