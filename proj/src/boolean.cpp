#include "arcbool/boolean.hpp"

#include <algorithm>
#include <cmath>

#include "arcbool/oracle.hpp"

namespace arcbool {

const char* method_name(Method m) {
  switch (m) {
    case Method::Re2l: return "re2l";
    case Method::Naive: return "naive";
    case Method::Standard: return "standard";
  }
  return "?";
}

namespace {

BoolResult disjoint_fallback(const ArcPolygon& p1, const ArcPolygon& p2, BoolOp op) {
  BoolResult r;
  r.op = op;
  switch (op) {
    case BoolOp::Intersection:
      break;
    case BoolOp::Union:
      r.circuits.push_back(circuit_from_polygon(p1, 1));
      r.circuits.push_back(circuit_from_polygon(p2, 2));
      break;
    case BoolOp::Difference:
      r.circuits.push_back(circuit_from_polygon(p1, 1));
      break;
  }
  return r;
}

}  // namespace

BoolResult finish_pipeline(const ArcPolygon& p1, const ArcPolygon& p2, const SeqList& s1,
                           const SeqList& s2, const RelatedEdgeSet& rel, BoolOp op,
                           const Tolerances& tol, PipelineStats* stats) {
  NewRings rings =
      construct_new_linked_lists(p1, p2, s1, s2, rel, tol, stats ? &stats->relink : nullptr);
  if (rings.crossings > 0) assign_entry_exit(rings.p1, rings.p2, p2, tol);
  switch (op) {
    case BoolOp::Intersection:
      return traverse_intersection(rings.p1, rings.p2, p1, p2, tol);
    case BoolOp::Union:
      return traverse_union(rings.p1, rings.p2, p1, p2, tol);
    case BoolOp::Difference:
      return traverse_difference(rings.p1, rings.p2, p1, p2, tol);
  }
  fail(Errc::InternalError, "unknown operation");
}

BoolResult boolean_op(const ArcPolygon& p1, const ArcPolygon& p2, BoolOp op, Method method,
                      const Tolerances& tol, PipelineStats* stats) {
  if (method != Method::Re2l) {
    return oracle_boolean(p1, p2, op,
                          method == Method::Naive ? OracleVariant::NaivePairs
                                                  : OracleVariant::StandardSweep,
                          tol, stats);
  }
  const Box b1 = mbr(p1), b2 = mbr(p2);
  if (!effective_axis(b1, b2, tol)) return disjoint_fallback(p1, p2, op);
  SequenceLists seqs = construct_sequence_lists(p1, p2, tol, stats ? &stats->sweep : nullptr);
  return finish_pipeline(p1, p2, seqs.s1, seqs.s2, seqs.related, op, tol, stats);
}

double total_area(const BoolResult& r, const Tolerances& tol) {
  double a = 0.0;
  for (const Circuit& c : r.circuits) a += ring_area(c.ring, tol);
  return a;
}

namespace {

struct CanonCircuit {
  std::vector<Point> pts;
  std::vector<char> kinds;  // 'x' crossing, 'a' appendix, 'v' vertex
  double area = 0.0;
};

CanonCircuit canonicalize(const Circuit& c) {
  CanonCircuit out;
  const std::vector<Node*> ns = c.ring.nodes();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i]->pt.x < ns[best]->pt.x ||
        (ns[i]->pt.x == ns[best]->pt.x && ns[i]->pt.y < ns[best]->pt.y))
      best = i;
  }
  for (std::size_t k = 0; k < ns.size(); ++k) {
    Node* n = ns[(best + k) % ns.size()];
    out.pts.push_back(n->pt);
    out.kinds.push_back(n->crossing ? 'x' : (n->tag == NodeTag::Appendix ? 'a' : 'v'));
  }
  out.area = ring_area(c.ring);
  return out;
}

bool canon_less(const CanonCircuit& a, const CanonCircuit& b) {
  if (a.pts.front().x != b.pts.front().x) return a.pts.front().x < b.pts.front().x;
  if (a.pts.front().y != b.pts.front().y) return a.pts.front().y < b.pts.front().y;
  return a.pts.size() < b.pts.size();
}

}  // namespace

bool canonical_equal(const BoolResult& a, const BoolResult& b, double eps, double area_rel) {
  if (a.circuits.size() != b.circuits.size()) return false;
  std::vector<CanonCircuit> ca, cb;
  for (const Circuit& c : a.circuits) ca.push_back(canonicalize(c));
  for (const Circuit& c : b.circuits) cb.push_back(canonicalize(c));
  std::sort(ca.begin(), ca.end(), canon_less);
  std::sort(cb.begin(), cb.end(), canon_less);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].pts.size() != cb[i].pts.size()) return false;
    if (ca[i].kinds != cb[i].kinds) return false;
    for (std::size_t j = 0; j < ca[i].pts.size(); ++j) {
      if (dist(ca[i].pts[j], cb[i].pts[j]) > eps) return false;
    }
    const double scale = std::max({1.0, std::fabs(ca[i].area), std::fabs(cb[i].area)});
    if (std::fabs(ca[i].area - cb[i].area) > area_rel * scale) return false;
  }
  return true;
}

}  // namespace arcbool
