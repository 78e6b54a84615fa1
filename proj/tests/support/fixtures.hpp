#pragma once

#include <vector>

#include "arcbool/arc_polygon.hpp"

namespace arcbool::fixtures {

inline PointRec v(double x, double y) { return {{x, y}, NodeTag::Vertex}; }
inline PointRec a(double x, double y) { return {{x, y}, NodeTag::Appendix}; }

// Two hand-made polygons, 6 and 5 edges, two arcs each; listed
// counter-clockwise from the bottom-left vertex.
inline std::vector<PointRec> bench_p1_points() {
  return {v(10, 10), v(40, 10), v(40, 30), a(32.5, 40), v(20, 40), v(15, 30), a(25, 22.5),
          v(15, 15)};
}

inline std::vector<PointRec> bench_p2_points() {
  return {v(20, 20), a(32.5, 25), v(45, 20), v(55, 30), a(35, 35.625), v(50, 50), v(30, 45)};
}

inline ArcPolygon bench_p1() { return ArcPolygon::from_point_list(bench_p1_points()); }

// The published appendix (35, 35.625) makes the fourth edge a major arc
// that crosses the following segment at about (38.21, 47.05), so the strict
// simplicity check rejects this polygon; tests that do not depend on
// simplicity build it unchecked.
inline ArcPolygon bench_p2() { return ArcPolygon::trusted(bench_p2_points()); }

// Axis-aligned squares offset along the diagonal: crossings (2,1) and (1,2).
inline ArcPolygon square_a() {
  return ArcPolygon::from_point_list({v(0, 0), v(2, 0), v(2, 2), v(0, 2)});
}
inline ArcPolygon square_b() {
  return ArcPolygon::from_point_list({v(1, 1), v(3, 1), v(3, 3), v(1, 3)});
}

// Unit circles, as two semicircular arcs each, centers distance 1 apart.
inline ArcPolygon circle_at(double cx, double cy, double r = 1.0) {
  return ArcPolygon::from_point_list(
      {v(cx + r, cy), a(cx, cy + r), v(cx - r, cy), a(cx, cy - r)});
}

// Two polygons with one arc each that intersect in four crossings: two on
// the first edge of p1, one on its arc, one on its closing edge. Drives the
// worked traversal example (single intersection circuit, 13-node union,
// difference circuits of sizes 3 and 5).
inline ArcPolygon worked_p1() {
  return ArcPolygon::from_point_list(
      {v(1, 0), v(7, 0), v(7, 4), a(4, 6), v(1, 4)});
}
inline ArcPolygon worked_p2() {
  return ArcPolygon::from_point_list(
      {v(3.5, -1), v(5, -1), v(5.5, 7), a(2, 8.5), v(-1, 5)});
}

}  // namespace arcbool::fixtures
