#pragma once

#include "arcbool/boolean.hpp"

namespace arcbool {

// Baseline intersection finders for differential testing and benchmarks.
enum class OracleVariant { NaivePairs, StandardSweep };

struct OracleHit {
  int edge1 = -1;  // edge index in polygon 1's ring
  int edge2 = -1;  // edge index in polygon 2's ring
  Point pt;
};

// NaivePairs tests every edge pair of the two polygons (exactly m*n calls);
// StandardSweep runs the unlabeled, unfiltered sweep over all edges and
// discards same-polygon reports.
std::vector<OracleHit> oracle_intersections(const ArcPolygon& p1, const ArcPolygon& p2,
                                            OracleVariant variant, const Tolerances& tol = {},
                                            SweepCounters* counters = nullptr);

// Boolean result built on the baseline intersections and the shared
// relink/traversal stages. NaivePairs skips arc decomposition entirely and
// splits original edges directly at their intersections.
BoolResult oracle_boolean(const ArcPolygon& p1, const ArcPolygon& p2, BoolOp op,
                          OracleVariant variant, const Tolerances& tol = {},
                          PipelineStats* stats = nullptr);

}  // namespace arcbool
