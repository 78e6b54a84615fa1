#include "arcbool/error.hpp"

namespace arcbool {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::OverlapUnsupported: return "OverlapUnsupported";
    case Errc::OutOfSpan: return "OutOfSpan";
    case Errc::PointNotOnEdge: return "PointNotOnEdge";
    case Errc::UnsortedSplitPoints: return "UnsortedSplitPoints";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotCCW: return "NotCCW";
    case Errc::BadAppendix: return "BadAppendix";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DisjointInputs: return "DisjointInputs";
    case Errc::DegenerateConfiguration: return "DegenerateConfiguration";
    case Errc::OddCrossingCount: return "OddCrossingCount";
    case Errc::TraversalStuck: return "TraversalStuck";
    case Errc::UnionHoleUnsupported: return "UnionHoleUnsupported";
    case Errc::DifferenceHoleUnsupported: return "DifferenceHoleUnsupported";
    case Errc::InconsistentRun: return "InconsistentRun";
    case Errc::ParseError: return "ParseError";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::MismatchedResults: return "MismatchedResults";
    case Errc::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace arcbool
