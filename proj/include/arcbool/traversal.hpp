#pragma once

#include "arcbool/relink.hpp"

namespace arcbool {

// Assigns alternating entry/exit properties to the crossing nodes of p1s,
// anchored by a containment test of the boundary portion right after the
// first crossing; twins in p2s copy their partner's property. Throws
// OddCrossingCount when the crossing count is odd.
void assign_entry_exit(Ring& p1s, Ring& p2s, const ArcPolygon& p2, const Tolerances& tol = {});

// The three traversal rules. Rings must carry assigned properties when they
// hold crossings; crossing-free rings fall back to containment handling of
// the original polygons.
BoolResult traverse_intersection(Ring& p1s, Ring& p2s, const ArcPolygon& p1,
                                 const ArcPolygon& p2, const Tolerances& tol = {});
BoolResult traverse_union(Ring& p1s, Ring& p2s, const ArcPolygon& p1, const ArcPolygon& p2,
                          const Tolerances& tol = {});
BoolResult traverse_difference(Ring& p1s, Ring& p2s, const ArcPolygon& p1,
                               const ArcPolygon& p2, const Tolerances& tol = {});

// A whole input polygon repackaged as one output circuit.
Circuit circuit_from_polygon(const ArcPolygon& p, int source);

}  // namespace arcbool
