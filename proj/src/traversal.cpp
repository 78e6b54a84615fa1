#include "arcbool/traversal.hpp"

#include <algorithm>

namespace arcbool {

namespace {

std::vector<Node*> ring_crossings(const Ring& r) {
  std::vector<Node*> out;
  for (Node* n : r.nodes())
    if (n->crossing) out.push_back(n);
  return out;
}

// Sub-edge from a boundary node to the next boundary node along the ring.
Edge portion_after(Node* n, const Tolerances& tol) {
  Node* a = n->next;
  if (a->tag == NodeTag::Appendix) return Edge::arc(n->pt, a->pt, a->next->pt, tol);
  return Edge::segment(n->pt, a->pt, tol);
}

}  // namespace

void assign_entry_exit(Ring& p1s, Ring& p2s, const ArcPolygon& p2, const Tolerances& tol) {
  (void)p2s;
  const std::vector<Node*> crossings = ring_crossings(p1s);
  if (crossings.empty()) return;
  if (crossings.size() % 2 != 0)
    fail(Errc::OddCrossingCount, "odd number of crossings (tangency or degeneracy)");

  const Edge first = portion_after(crossings.front(), tol);
  Side side = Side::OnBoundary;
  for (double t : {0.5, 0.25, 0.75}) {
    side = point_in_polygon(first.point_at(t), p2, tol);
    if (side != Side::OnBoundary) break;
  }
  if (side == Side::OnBoundary)
    fail(Errc::DegenerateConfiguration, "boundary portion lies on the other polygon");

  EntryExit prop = (side == Side::Inside) ? EntryExit::Entry : EntryExit::Exit;
  for (Node* c : crossings) {
    c->ee = prop;
    if (!c->twin) fail(Errc::InternalError, "crossing without a twin");
    c->twin->ee = prop;
    prop = (prop == EntryExit::Entry) ? EntryExit::Exit : EntryExit::Entry;
  }
}

namespace {

struct Walker {
  Ring& p1s;
  Ring& p2s;
  const Tolerances& tol;

  Circuit walk(Node* start, EntryExit shift_p1, EntryExit shift_p2, bool p2_backward) {
    Circuit circuit;
    const std::size_t budget = p1s.size() + p2s.size() + 2;
    std::size_t steps = 0;
    Node* cur = start;
    bool in_p1 = true;
    while (true) {
      if (++steps > budget) fail(Errc::TraversalStuck, "circuit exceeded the node budget");
      if (cur->crossing && cur->visited && cur != start && cur != start->twin)
        fail(Errc::TraversalStuck, "revisited a crossing mid-circuit");
      circuit.ring.append(cur->pt, cur->tag, cur->crossing);
      circuit.provenance.push_back({in_p1 ? 1 : 2, cur->tag, cur->crossing});
      cur->visited = true;
      if (cur->twin) cur->twin->visited = true;

      const EntryExit shift_prop = in_p1 ? shift_p1 : shift_p2;
      if (cur->crossing && cur->ee == shift_prop) {
        Node* tw = cur->twin;
        if (!tw) fail(Errc::TraversalStuck, "missing shift target");
        in_p1 = !in_p1;
        const bool backward = !in_p1 && p2_backward;
        cur = backward ? tw->prev : tw->next;
      } else {
        const bool backward = !in_p1 && p2_backward;
        cur = backward ? cur->prev : cur->next;
      }
      if (cur == start || (start->twin && cur == start->twin)) break;
    }
    if (ring_area(circuit.ring, tol) < 0.0) {
      circuit.ring.reverse();
      std::reverse(circuit.provenance.begin(), circuit.provenance.end());
      std::rotate(circuit.provenance.begin(), circuit.provenance.end() - 1,
                  circuit.provenance.end());
      circuit.reversed = true;
    }
    return circuit;
  }
};

Node* find_crossing(const Ring& r, EntryExit prop) {
  for (Node* n : r.nodes())
    if (n->crossing && !n->visited && n->ee == prop) return n;
  return nullptr;
}

Node* find_outside_vertex(const Ring& r, const ArcPolygon& other, bool unvisited_only,
                          const Tolerances& tol) {
  for (Node* n : r.nodes()) {
    if (n->crossing || n->tag != NodeTag::Vertex) continue;
    if (unvisited_only && n->visited) continue;
    if (point_in_polygon(n->pt, other, tol) == Side::Outside) return n;
  }
  return nullptr;
}

bool any_unvisited_crossing(const Ring& r) {
  for (Node* n : r.nodes())
    if (n->crossing && !n->visited) return true;
  return false;
}

// Containment probe for the crossing-free case.
bool polygon_inside(const ArcPolygon& inner, const ArcPolygon& outer, const Tolerances& tol) {
  for (Node* n : inner.ring().nodes()) {
    if (n->tag == NodeTag::Appendix) continue;
    const Side s = point_in_polygon(n->pt, outer, tol);
    if (s != Side::OnBoundary) return s == Side::Inside;
  }
  fail(Errc::DegenerateConfiguration, "polygon boundary lies on the other polygon");
}

}  // namespace

Circuit circuit_from_polygon(const ArcPolygon& p, int source) {
  Circuit c;
  c.ring = p.ring().clone();
  for (Node* n : c.ring.nodes()) c.provenance.push_back({source, n->tag, n->crossing});
  return c;
}

BoolResult traverse_intersection(Ring& p1s, Ring& p2s, const ArcPolygon& p1,
                                 const ArcPolygon& p2, const Tolerances& tol) {
  BoolResult result;
  result.op = BoolOp::Intersection;
  if (ring_crossings(p1s).empty()) {
    if (polygon_inside(p1, p2, tol)) result.circuits.push_back(circuit_from_polygon(p1, 1));
    else if (polygon_inside(p2, p1, tol)) result.circuits.push_back(circuit_from_polygon(p2, 2));
    return result;
  }
  Walker w{p1s, p2s, tol};
  while (Node* start = find_crossing(p1s, EntryExit::Entry)) {
    result.circuits.push_back(w.walk(start, EntryExit::Exit, EntryExit::Entry, false));
  }
  if (any_unvisited_crossing(p1s) || any_unvisited_crossing(p2s))
    fail(Errc::TraversalStuck, "crossings left unvisited after intersection traversal");
  return result;
}

BoolResult traverse_union(Ring& p1s, Ring& p2s, const ArcPolygon& p1, const ArcPolygon& p2,
                          const Tolerances& tol) {
  BoolResult result;
  result.op = BoolOp::Union;
  if (ring_crossings(p1s).empty()) {
    if (polygon_inside(p1, p2, tol)) result.circuits.push_back(circuit_from_polygon(p2, 2));
    else if (polygon_inside(p2, p1, tol)) result.circuits.push_back(circuit_from_polygon(p1, 1));
    else {
      result.circuits.push_back(circuit_from_polygon(p1, 1));
      result.circuits.push_back(circuit_from_polygon(p2, 2));
    }
    return result;
  }
  Node* start = find_outside_vertex(p1s, p2, false, tol);
  // Every original vertex can sit inside the other polygon; any exit
  // crossing is then followed by outer boundary.
  if (!start) start = find_crossing(p1s, EntryExit::Exit);
  if (!start) fail(Errc::InternalError, "no starting point for the union traversal");
  Walker w{p1s, p2s, tol};
  result.circuits.push_back(w.walk(start, EntryExit::Entry, EntryExit::Exit, false));
  if (any_unvisited_crossing(p1s) || any_unvisited_crossing(p2s))
    fail(Errc::UnionHoleUnsupported, "union produces a hole");
  return result;
}

BoolResult traverse_difference(Ring& p1s, Ring& p2s, const ArcPolygon& p1,
                               const ArcPolygon& p2, const Tolerances& tol) {
  BoolResult result;
  result.op = BoolOp::Difference;
  if (ring_crossings(p1s).empty()) {
    if (polygon_inside(p1, p2, tol)) return result;  // fully swallowed
    if (polygon_inside(p2, p1, tol))
      fail(Errc::DifferenceHoleUnsupported, "difference produces a hole");
    result.circuits.push_back(circuit_from_polygon(p1, 1));
    return result;
  }
  Walker w{p1s, p2s, tol};
  while (true) {
    Node* start = find_outside_vertex(p1s, p2, true, tol);
    // Components whose boundary carries no original vertex are reachable
    // only through their entry crossings.
    if (!start) start = find_crossing(p1s, EntryExit::Entry);
    if (!start) break;
    result.circuits.push_back(w.walk(start, EntryExit::Entry, EntryExit::Exit, true));
  }
  if (any_unvisited_crossing(p1s) || any_unvisited_crossing(p2s))
    fail(Errc::TraversalStuck, "crossings left unvisited after difference traversal");
  return result;
}

}  // namespace arcbool
