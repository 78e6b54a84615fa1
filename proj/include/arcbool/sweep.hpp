#pragma once

#include <vector>

#include "arcbool/related_edges.hpp"

namespace arcbool {

// One entry of a sequence list: a processed related edge, the ordered
// intersections found on it, and the tri-value switch used to re-merge
// decomposed arcs (0 for ordinary edges, 1/2 alternating per source arc).
struct SeqItem {
  Edge edge;
  std::vector<Point> xsecs;    // ordered by parameter along the edge
  std::vector<double> params;  // parallel to xsecs
  int tri = 0;
  int origin = -1;  // index of the source edge in its polygon ring
};

struct SeqList {
  std::vector<SeqItem> items;
};

struct SweepCounters {
  long long pair_tests = 0;         // intersect_edges invocations
  long long same_polygon_tests = 0; // subset of pair_tests between same-origin edges
  long long events = 0;
  long long status_ops = 0;         // status inserts + erases
  long long crossings = 0;          // crossings filed
};

struct SweepOptions {
  bool suppress_same_origin = true; // skip pairs with equal polygon label
  bool indexed_filing = true;       // constant-time filing via the list index label
  bool memoize_pairs = true;        // test each pair at most once
};

// Decomposes non-x-monotone arcs and fills one sequence list in ring order,
// assigning tri-value switches 1,2,1,2,... per decomposed source arc.
SeqList initialize_sequence_list(const std::vector<Edge>& related,
                                 const std::vector<int>& origin,
                                 const Tolerances& tol = {});

// Plane sweep over the edges of both lists; files every transversal
// inter-polygon intersection into the matching items of s1 and s2.
void run_sweep(SeqList& s1, SeqList& s2, const SweepOptions& opts,
               const Tolerances& tol = {}, SweepCounters* counters = nullptr);

struct SequenceLists {
  SeqList s1, s2;
  RelatedEdgeSet related;
};

// Related-edge selection plus the labeled sweep (the full kernel).
SequenceLists construct_sequence_lists(const ArcPolygon& p1, const ArcPolygon& p2,
                                       const Tolerances& tol = {},
                                       SweepCounters* counters = nullptr);

}  // namespace arcbool
