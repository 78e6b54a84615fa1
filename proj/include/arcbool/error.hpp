#pragma once

#include <stdexcept>
#include <string>

namespace arcbool {

// Machine-readable failure codes. The CLI maps these onto exit statuses,
// so names are stable API.
enum class Errc {
  InvalidEdge,
  OverlapUnsupported,
  OutOfSpan,
  PointNotOnEdge,
  UnsortedSplitPoints,
  NotSimple,
  NotCCW,
  BadAppendix,
  TooFewVertices,
  DisjointInputs,
  DegenerateConfiguration,
  OddCrossingCount,
  TraversalStuck,
  UnionHoleUnsupported,
  DifferenceHoleUnsupported,
  InconsistentRun,
  ParseError,
  GenerationFailed,
  MismatchedResults,
  InternalError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");

}  // namespace arcbool
