#pragma once

#include <optional>
#include <vector>

#include "arcbool/arc_polygon.hpp"

namespace arcbool {

// Axis-aligned boundary line coordinates of the two bounding rectangles.
struct ExtendedBoundaries {
  double l1, r1, b1, t1;
  double l2, r2, b2, t2;
};

// Axis along which the related-edge band is taken: the narrow direction of
// the MBR overlap.
enum class Axis { X, Y };

struct RelatedEdgeSet {
  std::vector<Edge> r1, r2;          // related edges, in ring order
  std::vector<int> origin1, origin2; // index of the source edge in its polygon
};

Box mbr(const ArcPolygon& p);
ExtendedBoundaries extended_boundaries(const Box& b1, const Box& b2);

// nullopt when the boxes are strictly separated by more than eps_pt.
std::optional<Axis> effective_axis(const Box& b1, const Box& b2, const Tolerances& tol = {});

// Edges whose bounding box meets the closed band between the inner pair of
// extended boundary lines along the effective axis. Throws DisjointInputs
// when the MBRs do not intersect.
RelatedEdgeSet select_related(const ArcPolygon& p1, const ArcPolygon& p2,
                              const Tolerances& tol = {});

// Replaces every non-x-monotone arc by its decomposition, in place.
RelatedEdgeSet process_related(const RelatedEdgeSet& r, const Tolerances& tol = {});

}  // namespace arcbool
