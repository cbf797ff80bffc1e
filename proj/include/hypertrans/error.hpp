#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypertrans {

enum class Errc {
  EdgeWrongSize,
  VertexOutOfRange,
  DuplicateEdge,
  Disconnected,
  BadSubset,
  Overlap,
  BadParam,
  NotCoEdge,
  NotPendantEdge,
  NotUnicyclic,
  SourceNotInEdge,
  TargetInEdge,
  CollisionWithExistingEdge,
  GirthTooSmall,
  GirthNotTwo,
  NothingToMove,
  TooLarge,
  BadLemmaId,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypertrans
