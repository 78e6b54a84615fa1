#pragma once

#include "arcbool/arc_polygon.hpp"

namespace arcbool {

// Deterministic-by-seed simple CCW circular-arc polygon with exactly n
// edges and round(arc_fraction * n) arc edges: a radially perturbed star
// polygon around (50, 50) whose arc chords bulge outward; bulges shrink and
// the polygon regenerates (up to 32 attempts) until validation passes.
std::vector<PointRec> generate_points(int n, unsigned long long seed, double arc_fraction,
                                      const Tolerances& tol = {});

ArcPolygon generate_polygon(int n, unsigned long long seed, double arc_fraction,
                            const Tolerances& tol = {});

}  // namespace arcbool
