#pragma once

#include <string>
#include <vector>

#include "arcbool/arc_polygon.hpp"

namespace arcbool {

// Vector rendering of polygon point lists: closed paths with true elliptical
// arc commands, vertex/appendix/crossing markers, auto-fit viewport with a
// 5% margin. Pairwise crossing markers are added when exactly two polygons
// are given and their intersections are computable.
std::string render_svg(const std::vector<std::vector<PointRec>>& polygons,
                       const Tolerances& tol = {});

}  // namespace arcbool
