#include "arcbool/arc_polygon.hpp"

#include <algorithm>
#include <cmath>

namespace arcbool {

Node* Ring::append(Point pt, NodeTag tag, bool crossing) {
  pool_.push_back(std::make_unique<Node>());
  Node* n = pool_.back().get();
  n->pt = pt;
  n->tag = tag;
  n->crossing = crossing;
  if (!head_) {
    head_ = tail_ = n;
    n->prev = n->next = n;
  } else {
    n->prev = tail_;
    n->next = head_;
    tail_->next = n;
    head_->prev = n;
    tail_ = n;
  }
  return n;
}

std::vector<Node*> Ring::nodes() const {
  std::vector<Node*> out;
  out.reserve(pool_.size());
  if (!head_) return out;
  Node* n = head_;
  do {
    out.push_back(n);
    n = n->next;
  } while (n != head_);
  return out;
}

Ring Ring::clone() const {
  Ring r;
  for (Node* n : nodes()) {
    Node* c = r.append(n->pt, n->tag, n->crossing);
    c->ee = n->ee;
  }
  return r;
}

void Ring::reverse() {
  if (!head_) return;
  std::vector<Node*> ns = nodes();
  for (Node* n : ns) std::swap(n->prev, n->next);
  // Same head; the old second node is now the tail.
  tail_ = head_->prev;
}

void Ring::check_links() const {
  for (Node* n : nodes()) {
    if (n->next->prev != n || n->prev->next != n)
      fail(Errc::InternalError, "broken ring linkage");
  }
}

std::vector<Edge> ring_edges(const Ring& ring, const Tolerances& tol) {
  std::vector<Edge> out;
  std::vector<Node*> ns = ring.nodes();
  if (ns.empty()) return out;
  // Rotate to start at a non-appendix node.
  std::size_t first = 0;
  while (first < ns.size() && ns[first]->tag == NodeTag::Appendix) ++first;
  if (first == ns.size()) fail(Errc::InternalError, "ring of appendix nodes only");
  const std::size_t n = ns.size();
  std::size_t i = first;
  do {
    Node* a = ns[i];
    std::size_t j = (i + 1) % n;
    if (ns[j]->tag == NodeTag::Appendix) {
      Node* mid = ns[j];
      j = (j + 1) % n;
      if (ns[j]->tag == NodeTag::Appendix)
        fail(Errc::InternalError, "two consecutive appendix nodes");
      out.push_back(Edge::arc(a->pt, mid->pt, ns[j]->pt, tol));
    } else {
      out.push_back(Edge::segment(a->pt, ns[j]->pt, tol));
    }
    i = j;
  } while (i != first);
  return out;
}

double ring_area(const Ring& ring, const Tolerances& tol) {
  double acc = 0.0;
  for (const Edge& e : ring_edges(ring, tol)) {
    acc += cross(e.start(), e.end());
    if (e.is_arc()) {
      const double th = e.sweep();
      const double r = e.radius();
      // Signed circular segment between chord and arc.
      acc += (th >= 0.0 ? 1.0 : -1.0) * r * r * (std::fabs(th) - std::sin(std::fabs(th)));
    }
  }
  return 0.5 * acc;
}

namespace {

// Crossings of the horizontal ray {y = ry, x > px} with one edge.
// Returns false when the configuration is suspicious (endpoint or tangency
// within slack of the ray) and the caller should perturb the ray.
bool ray_hits(const Edge& e, double px, double ry, double slack, int* hits) {
  if (!e.is_arc()) {
    const Point a = e.start(), b = e.end();
    if (std::fabs(a.y - ry) <= slack || std::fabs(b.y - ry) <= slack) return false;
    if ((a.y < ry) == (b.y < ry)) return true;
    const double x = a.x + (b.x - a.x) * (ry - a.y) / (b.y - a.y);
    if (std::fabs(x - px) <= slack) return false;
    if (x > px) ++*hits;
    return true;
  }
  const Point c = e.center();
  const double r = e.radius();
  const double dy = ry - c.y;
  if (std::fabs(dy) >= r - slack) {
    // Tangent or near-tangent line is suspicious only when it could touch.
    return std::fabs(dy) > r + slack;
  }
  const double h = std::sqrt(r * r - dy * dy);
  for (double x : {c.x - h, c.x + h}) {
    const Point q{x, ry};
    if (coincident(q, e.start(), slack) || coincident(q, e.end(), slack)) return false;
    const double sw = e.sweep();
    const double raw = (sw > 0.0) ? ccw_delta(e.start_angle(), e.angle_of(q))
                                  : ccw_delta(e.angle_of(q), e.start_angle());
    if (raw >= std::fabs(sw)) continue;  // not on the arc
    if (std::fabs(x - px) <= slack) return false;
    if (x > px) ++*hits;
  }
  return true;
}

}  // namespace

Side point_in_ring(Point p, const Ring& ring, const Tolerances& tol) {
  const std::vector<Edge> edges = ring_edges(ring, tol);
  for (const Edge& e : edges) {
    if (point_on_edge(p, e, tol)) return Side::OnBoundary;
  }
  const double slack = 4.0 * tol.eps_pt;
  for (int attempt = 0; attempt <= 8; ++attempt) {
    const double ry = p.y + attempt * 8.0 * tol.eps_pt;
    int hits = 0;
    bool ok = true;
    for (const Edge& e : edges) {
      if (!ray_hits(e, p.x, ry, slack, &hits)) {
        ok = false;
        break;
      }
    }
    if (ok) return (hits % 2 == 1) ? Side::Inside : Side::Outside;
  }
  return Side::OnBoundary;
}

const char* bool_op_name(BoolOp op) {
  switch (op) {
    case BoolOp::Intersection: return "intersection";
    case BoolOp::Union: return "union";
    case BoolOp::Difference: return "difference";
  }
  return "?";
}

ArcPolygon ArcPolygon::build(const std::vector<PointRec>& pts, const Tolerances& tol,
                             bool check_simple) {
  if (pts.size() < 3) fail(Errc::TooFewVertices, "need at least 3 points");
  // Rotate so the list starts at a vertex.
  std::size_t first = 0;
  while (first < pts.size() && pts[first].tag == NodeTag::Appendix) ++first;
  if (first == pts.size()) fail(Errc::TooFewVertices, "no vertex in point list");

  ArcPolygon poly;
  int vertex_count = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const PointRec& rec = pts[(first + k) % pts.size()];
    if (!std::isfinite(rec.pt.x) || !std::isfinite(rec.pt.y))
      fail(Errc::InvalidEdge, "non-finite coordinate");
    if (rec.tag == NodeTag::Vertex) ++vertex_count;
    poly.ring_.append(rec.pt, rec.tag);
  }
  std::vector<Node*> ns = poly.ring_.nodes();
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (ns[k]->tag == NodeTag::Appendix && ns[(k + 1) % ns.size()]->tag == NodeTag::Appendix)
      fail(Errc::BadAppendix, "two consecutive appendix points");
  }

  try {
    poly.edges_ = ring_edges(poly.ring_, tol);
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidEdge) fail(Errc::BadAppendix, e.what());
    throw;
  }
  // A two-vertex polygon is valid only when both edges are arcs (a lens or a
  // full circle); two segments between the same endpoints are degenerate.
  if (vertex_count < 3) {
    const bool all_arcs =
        vertex_count == 2 && poly.edges_.size() == 2 &&
        poly.edges_[0].is_arc() && poly.edges_[1].is_arc();
    if (!all_arcs) fail(Errc::TooFewVertices, "fewer than 3 vertices");
  }
  if (ring_area(poly.ring_, tol) <= 0.0)
    fail(Errc::NotCCW, "polygon is not counter-clockwise");

  if (check_simple) {
    const std::vector<Edge>& es = poly.edges_;
    const int n = static_cast<int>(es.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
        std::vector<Point> xs;
        try {
          xs = intersect_edges(es[i], es[j], tol);
        } catch (const Error& e) {
          if (e.code() == Errc::OverlapUnsupported)
            fail(Errc::NotSimple, "overlapping edges");
          throw;
        }
        for (const Point& q : xs) {
          bool at_shared_vertex =
              adjacent && (coincident(q, es[j].start(), tol.eps_pt) ||
                           coincident(q, es[i].start(), tol.eps_pt) ||
                           coincident(q, es[i].end(), tol.eps_pt) ||
                           coincident(q, es[j].end(), tol.eps_pt));
          // With only two edges, both endpoints are legitimately shared.
          if (n == 2) at_shared_vertex = coincident(q, es[0].start(), tol.eps_pt) ||
                                         coincident(q, es[0].end(), tol.eps_pt);
          if (!at_shared_vertex) fail(Errc::NotSimple, "self-intersection");
        }
      }
    }
  }
  return poly;
}

ArcPolygon ArcPolygon::from_point_list(const std::vector<PointRec>& pts,
                                       const Tolerances& tol) {
  return build(pts, tol, true);
}

ArcPolygon ArcPolygon::trusted(const std::vector<PointRec>& pts, const Tolerances& tol) {
  return build(pts, tol, false);
}

std::vector<PointRec> ArcPolygon::to_point_list() const {
  std::vector<PointRec> out;
  for (Node* n : ring_.nodes()) out.push_back({n->pt, n->tag});
  return out;
}

double area(const ArcPolygon& p, const Tolerances& tol) { return ring_area(p.ring(), tol); }

Side point_in_polygon(Point p, const ArcPolygon& poly, const Tolerances& tol) {
  return point_in_ring(p, poly.ring(), tol);
}

}  // namespace arcbool
