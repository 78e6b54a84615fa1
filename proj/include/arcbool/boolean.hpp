#pragma once

#include "arcbool/relink.hpp"
#include "arcbool/traversal.hpp"

namespace arcbool {

enum class Method { Re2l, Naive, Standard };

const char* method_name(Method m);

struct PipelineStats {
  SweepCounters sweep;
  RelinkStats relink;
};

// Full pipeline: related-edge selection, intersection discovery (per
// method), ring reconstruction, entry/exit assignment and traversal.
BoolResult boolean_op(const ArcPolygon& p1, const ArcPolygon& p2, BoolOp op,
                      Method method = Method::Re2l, const Tolerances& tol = {},
                      PipelineStats* stats = nullptr);

// Tail of the pipeline shared by every method: sequence lists in, result out.
BoolResult finish_pipeline(const ArcPolygon& p1, const ArcPolygon& p2, const SeqList& s1,
                           const SeqList& s2, const RelatedEdgeSet& rel, BoolOp op,
                           const Tolerances& tol, PipelineStats* stats);

// Canonical equality of results: circuits rotated to their lexicographically
// smallest point and compared pointwise (and kind-wise) within eps; circuit
// areas compared within area_rel relative.
bool canonical_equal(const BoolResult& a, const BoolResult& b, double eps = 1e-9,
                     double area_rel = 1e-9);

double total_area(const BoolResult& r, const Tolerances& tol = {});

}  // namespace arcbool
