#pragma once

#include <optional>
#include <vector>

#include "arcbool/sweep.hpp"

namespace arcbool {

// Node payload for a chain about to be spliced into a ring.
struct NodeSpec {
  Point pt;
  NodeTag tag = NodeTag::Vertex;
  bool crossing = false;
};

struct RelinkStats {
  // One entry per arc that received intersections: (k, new appendix nodes).
  std::vector<std::pair<int, int>> appendix_counts;
  std::vector<int> run_lengths;  // consumed decomposed-arc run sizes
  int crossings = 0;             // crossing node pairs created
};

// Chain start..end for an arc carrying k >= 1 ordered intersections. Every
// sub-arc gets exactly one appendix node; the original appendix is reused
// for its sub-arc unless it coincides with an intersection.
std::vector<NodeSpec> insert_appendix_points(const Edge& arc, const std::vector<Point>& xsecs,
                                             const Tolerances& tol = {},
                                             int* new_appendix_count = nullptr);

// Merges a maximal same-tri run of decomposed pieces back onto its original
// arc. nullopt means the run carried no intersections and the caller keeps
// the original edge verbatim.
std::optional<std::vector<NodeSpec>> merge_run(const std::vector<SeqItem>& run,
                                               const Edge& original,
                                               const Tolerances& tol = {},
                                               RelinkStats* stats = nullptr);

struct NewRings {
  Ring p1, p2;
  int crossings = 0;  // matched crossing pairs (twin-linked)
};

// Splices sequence-list information into copies of the original rings,
// creating twin-linked crossing nodes and healing decomposed arcs.
NewRings construct_new_linked_lists(const ArcPolygon& p1, const ArcPolygon& p2,
                                    const SeqList& s1, const SeqList& s2,
                                    const RelatedEdgeSet& rel, const Tolerances& tol = {},
                                    RelinkStats* stats = nullptr);

}  // namespace arcbool
