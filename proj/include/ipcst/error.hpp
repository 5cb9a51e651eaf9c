#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipcst {

enum class ErrorCode {
  DuplicateEdgeId,
  DuplicateVertexId,
  UnknownVertex,
  NonPositiveCost,
  NegativePrize,
  UnreachablePrizeVertex,
  NotARootedSubtree,
  ForeignEdgeId,
  AmbiguousAnchor,
  InstanceTooLarge,
  TreeTooLarge,
  NotInTree,
  NotATree,
  NoPrizeLeft,
  InvalidOrdering,
  BadParameter,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NonPositiveCost: return "NonPositiveCost";
    case ErrorCode::NegativePrize: return "NegativePrize";
    case ErrorCode::UnreachablePrizeVertex: return "UnreachablePrizeVertex";
    case ErrorCode::NotARootedSubtree: return "NotARootedSubtree";
    case ErrorCode::ForeignEdgeId: return "ForeignEdgeId";
    case ErrorCode::AmbiguousAnchor: return "AmbiguousAnchor";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::TreeTooLarge: return "TreeTooLarge";
    case ErrorCode::NotInTree: return "NotInTree";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NoPrizeLeft: return "NoPrizeLeft";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// front-ends can report it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ipcst
