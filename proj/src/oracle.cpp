#include "arcbool/oracle.hpp"

#include <algorithm>

namespace arcbool {

namespace {

// Files q into the item at `index`, keeping xsecs ordered by parameter.
void file_hit(SeqList* list, int index, Point q, const Tolerances& tol) {
  SeqItem& item = list->items[index];
  const double t = item.edge.param_of(q);
  auto pos = std::lower_bound(item.params.begin(), item.params.end(), t);
  const std::size_t at = static_cast<std::size_t>(pos - item.params.begin());
  if (at < item.params.size() && coincident(item.xsecs[at], q, tol.eps_pt)) return;
  if (at > 0 && coincident(item.xsecs[at - 1], q, tol.eps_pt)) return;
  item.params.insert(pos, t);
  item.xsecs.insert(item.xsecs.begin() + at, q);
}

// Sequence lists with one item per original edge, no decomposition.
SeqList verbatim_list(const ArcPolygon& p) {
  SeqList list;
  const std::vector<Edge>& es = p.edges();
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    SeqItem item;
    item.edge = es[i];
    item.tri = 0;
    item.origin = i;
    list.items.push_back(std::move(item));
  }
  return list;
}

RelatedEdgeSet all_edges_related(const ArcPolygon& p1, const ArcPolygon& p2) {
  RelatedEdgeSet rel;
  rel.r1 = p1.edges();
  rel.r2 = p2.edges();
  for (int i = 0; i < static_cast<int>(rel.r1.size()); ++i) rel.origin1.push_back(i);
  for (int i = 0; i < static_cast<int>(rel.r2.size()); ++i) rel.origin2.push_back(i);
  return rel;
}

struct NaiveLists {
  SeqList s1, s2;
  std::vector<OracleHit> hits;
};

NaiveLists naive_pairs(const ArcPolygon& p1, const ArcPolygon& p2, const Tolerances& tol,
                       SweepCounters* counters) {
  NaiveLists out;
  out.s1 = verbatim_list(p1);
  out.s2 = verbatim_list(p2);
  const std::vector<Edge>& e1 = p1.edges();
  const std::vector<Edge>& e2 = p2.edges();
  for (int i = 0; i < static_cast<int>(e1.size()); ++i) {
    for (int j = 0; j < static_cast<int>(e2.size()); ++j) {
      if (counters) ++counters->pair_tests;
      for (const Point& q : intersect_edges(e1[i], e2[j], tol)) {
        for (const Edge* e : {&e1[i], &e2[j]}) {
          if (coincident(q, e->start(), tol.eps_pt) || coincident(q, e->end(), tol.eps_pt))
            fail(Errc::DegenerateConfiguration,
                 "intersection coincides with an edge endpoint");
        }
        file_hit(&out.s1, i, q, tol);
        file_hit(&out.s2, j, q, tol);
        out.hits.push_back({i, j, q});
        if (counters) ++counters->crossings;
      }
    }
  }
  return out;
}

struct StandardLists {
  SeqList s1, s2;
  RelatedEdgeSet rel;
};

StandardLists standard_sweep(const ArcPolygon& p1, const ArcPolygon& p2, const Tolerances& tol,
                             SweepCounters* counters) {
  StandardLists out;
  out.rel = all_edges_related(p1, p2);
  out.s1 = initialize_sequence_list(out.rel.r1, out.rel.origin1, tol);
  out.s2 = initialize_sequence_list(out.rel.r2, out.rel.origin2, tol);
  SweepOptions opts;
  opts.suppress_same_origin = false;
  opts.indexed_filing = false;
  opts.memoize_pairs = false;
  run_sweep(out.s1, out.s2, opts, tol, counters);
  return out;
}

}  // namespace

std::vector<OracleHit> oracle_intersections(const ArcPolygon& p1, const ArcPolygon& p2,
                                            OracleVariant variant, const Tolerances& tol,
                                            SweepCounters* counters) {
  if (variant == OracleVariant::NaivePairs) {
    return naive_pairs(p1, p2, tol, counters).hits;
  }
  StandardLists lists = standard_sweep(p1, p2, tol, counters);
  // Join the per-polygon filings back into (edge1, edge2, point) hits.
  std::vector<OracleHit> hits;
  for (const SeqItem& item : lists.s1.items) {
    for (const Point& q : item.xsecs) hits.push_back({item.origin, -1, q});
  }
  for (const SeqItem& item : lists.s2.items) {
    for (const Point& q : item.xsecs) {
      bool matched = false;
      for (OracleHit& h : hits) {
        if (h.edge2 < 0 && coincident(h.pt, q, tol.eps_pt)) {
          h.edge2 = item.origin;
          matched = true;
          break;
        }
      }
      if (!matched) fail(Errc::InternalError, "unbalanced sweep filing");
    }
  }
  for (const OracleHit& h : hits) {
    if (h.edge2 < 0) fail(Errc::InternalError, "unbalanced sweep filing");
  }
  return hits;
}

BoolResult oracle_boolean(const ArcPolygon& p1, const ArcPolygon& p2, BoolOp op,
                          OracleVariant variant, const Tolerances& tol, PipelineStats* stats) {
  const Box b1 = mbr(p1), b2 = mbr(p2);
  if (!effective_axis(b1, b2, tol)) {
    // Same disjoint handling as the main pipeline.
    BoolResult r;
    r.op = op;
    if (op == BoolOp::Union) {
      r.circuits.push_back(circuit_from_polygon(p1, 1));
      r.circuits.push_back(circuit_from_polygon(p2, 2));
    } else if (op == BoolOp::Difference) {
      r.circuits.push_back(circuit_from_polygon(p1, 1));
    }
    return r;
  }
  if (variant == OracleVariant::NaivePairs) {
    NaiveLists lists = naive_pairs(p1, p2, tol, stats ? &stats->sweep : nullptr);
    return finish_pipeline(p1, p2, lists.s1, lists.s2, all_edges_related(p1, p2), op, tol,
                           stats);
  }
  StandardLists lists = standard_sweep(p1, p2, tol, stats ? &stats->sweep : nullptr);
  return finish_pipeline(p1, p2, lists.s1, lists.s2, lists.rel, op, tol, stats);
}

}  // namespace arcbool
