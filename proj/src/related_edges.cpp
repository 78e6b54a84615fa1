#include "arcbool/related_edges.hpp"

#include <algorithm>
#include <array>

namespace arcbool {

Box mbr(const ArcPolygon& p) {
  const std::vector<Edge>& es = p.edges();
  Box b = edge_bbox(es.front());
  for (std::size_t i = 1; i < es.size(); ++i) b.expand(edge_bbox(es[i]));
  return b;
}

ExtendedBoundaries extended_boundaries(const Box& b1, const Box& b2) {
  return {b1.xmin, b1.xmax, b1.ymin, b1.ymax, b2.xmin, b2.xmax, b2.ymin, b2.ymax};
}

std::optional<Axis> effective_axis(const Box& b1, const Box& b2, const Tolerances& tol) {
  if (!b1.overlaps(b2, tol.eps_pt)) return std::nullopt;
  const double hspan = std::min(b1.xmax, b2.xmax) - std::max(b1.xmin, b2.xmin);
  const double vspan = std::min(b1.ymax, b2.ymax) - std::max(b1.ymin, b2.ymin);
  return (hspan >= vspan) ? Axis::Y : Axis::X;
}

namespace {

// Inner pair of the four boundary coordinates; handles every ordering,
// containment included.
std::pair<double, double> band(double a0, double a1, double b0, double b1) {
  std::array<double, 4> c{a0, a1, b0, b1};
  std::sort(c.begin(), c.end());
  return {c[1], c[2]};
}

void select_one(const ArcPolygon& p, Axis axis, double lo, double hi, double eps,
                std::vector<Edge>* out, std::vector<int>* origin) {
  const std::vector<Edge>& es = p.edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    const Box b = edge_bbox(es[i]);
    const double emin = (axis == Axis::X) ? b.xmin : b.ymin;
    const double emax = (axis == Axis::X) ? b.xmax : b.ymax;
    if (emax >= lo - eps && emin <= hi + eps) {
      out->push_back(es[i]);
      origin->push_back(i);
    }
  }
}

}  // namespace

RelatedEdgeSet select_related(const ArcPolygon& p1, const ArcPolygon& p2,
                              const Tolerances& tol) {
  const Box b1 = mbr(p1), b2 = mbr(p2);
  const std::optional<Axis> axis = effective_axis(b1, b2, tol);
  if (!axis) fail(Errc::DisjointInputs, "bounding rectangles do not intersect");
  const auto [lo, hi] = (*axis == Axis::X) ? band(b1.xmin, b1.xmax, b2.xmin, b2.xmax)
                                           : band(b1.ymin, b1.ymax, b2.ymin, b2.ymax);
  RelatedEdgeSet r;
  select_one(p1, *axis, lo, hi, tol.eps_pt, &r.r1, &r.origin1);
  select_one(p2, *axis, lo, hi, tol.eps_pt, &r.r2, &r.origin2);
  return r;
}

RelatedEdgeSet process_related(const RelatedEdgeSet& r, const Tolerances& tol) {
  RelatedEdgeSet out;
  auto process = [&tol](const std::vector<Edge>& in, const std::vector<int>& origin,
                        std::vector<Edge>* edges, std::vector<int>* origins) {
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i].is_arc() && !is_x_monotone(in[i])) {
        for (const Edge& piece : decompose_arc(in[i], tol)) {
          edges->push_back(piece);
          origins->push_back(origin[i]);
        }
      } else {
        edges->push_back(in[i]);
        origins->push_back(origin[i]);
      }
    }
  };
  process(r.r1, r.origin1, &out.r1, &out.origin1);
  process(r.r2, r.origin2, &out.r2, &out.origin2);
  return out;
}

}  // namespace arcbool
