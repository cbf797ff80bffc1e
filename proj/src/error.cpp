#include "hypertrans/error.hpp"

namespace hypertrans {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EdgeWrongSize: return "EdgeWrongSize";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::BadSubset: return "BadSubset";
    case Errc::Overlap: return "Overlap";
    case Errc::BadParam: return "BadParam";
    case Errc::NotCoEdge: return "NotCoEdge";
    case Errc::NotPendantEdge: return "NotPendantEdge";
    case Errc::NotUnicyclic: return "NotUnicyclic";
    case Errc::SourceNotInEdge: return "SourceNotInEdge";
    case Errc::TargetInEdge: return "TargetInEdge";
    case Errc::CollisionWithExistingEdge: return "CollisionWithExistingEdge";
    case Errc::GirthTooSmall: return "GirthTooSmall";
    case Errc::GirthNotTwo: return "GirthNotTwo";
    case Errc::NothingToMove: return "NothingToMove";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadLemmaId: return "BadLemmaId";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hypertrans
