#include "arcbool/relink.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace arcbool {

std::vector<NodeSpec> insert_appendix_points(const Edge& arc, const std::vector<Point>& xsecs,
                                             const Tolerances& tol, int* new_appendix_count) {
  if (!arc.is_arc()) fail(Errc::InvalidEdge, "appendix insertion on a segment");
  if (xsecs.empty()) fail(Errc::InvalidEdge, "appendix insertion without intersections");

  const std::vector<Edge> pieces = split_edge_at(arc, xsecs, tol);
  const Point old_app = arc.appendix();
  bool coincides = false;
  for (const Point& q : xsecs) {
    if (coincident(q, old_app, tol.eps_pt)) coincides = true;
  }

  int fresh = 0;
  const double t_old = arc.param_of(old_app);
  std::vector<NodeSpec> chain;
  chain.push_back({arc.start(), NodeTag::Vertex, false});
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Edge& piece = pieces[i];
    Point app = piece.appendix();  // angular midpoint from the split
    bool reused = false;
    if (!coincides) {
      const double t0 = arc.param_of(piece.start());
      const double t1 = arc.param_of(piece.end());
      if (t_old > t0 + tol.eps_param && t_old < t1 - tol.eps_param) {
        app = old_app;
        reused = true;
      }
    }
    if (!reused) ++fresh;
    chain.push_back({app, NodeTag::Appendix, false});
    const bool last = (i + 1 == pieces.size());
    chain.push_back({piece.end(), NodeTag::Vertex, !last});
  }
  if (new_appendix_count) *new_appendix_count = fresh;
  return chain;
}

std::optional<std::vector<NodeSpec>> merge_run(const std::vector<SeqItem>& run,
                                               const Edge& original, const Tolerances& tol,
                                               RelinkStats* stats) {
  if (run.size() < 2 || run.size() > 3)
    fail(Errc::InconsistentRun, "decomposed-arc run must have 2 or 3 pieces");
  if (!original.is_arc()) fail(Errc::InconsistentRun, "run of pieces for a non-arc edge");
  for (const SeqItem& item : run) {
    if (!item.edge.is_arc() ||
        !coincident(item.edge.center(), original.center(),
                    tol.eps_rel * original.radius() + tol.eps_pt) ||
        std::fabs(item.edge.radius() - original.radius()) >
            tol.eps_rel * original.radius() + tol.eps_pt) {
      fail(Errc::InconsistentRun, "run piece does not lie on the original arc");
    }
  }
  if (stats) stats->run_lengths.push_back(static_cast<int>(run.size()));

  bool any = false;
  for (const SeqItem& item : run)
    if (!item.xsecs.empty()) any = true;
  if (!any) return std::nullopt;  // keep the original edge verbatim

  // Split the original arc at the intersections only; the decomposition cuts
  // at the horizontal extremes are healed by construction.
  std::vector<Point> xsecs;
  for (const SeqItem& item : run)
    for (const Point& q : item.xsecs) xsecs.push_back(q);
  int fresh = 0;
  std::vector<NodeSpec> chain = insert_appendix_points(original, xsecs, tol, &fresh);
  if (stats) stats->appendix_counts.emplace_back(static_cast<int>(xsecs.size()), fresh);
  return chain;
}

namespace {

struct TwinRegistry {
  struct Entry {
    Node* first = nullptr;
    Node* second = nullptr;
  };
  std::map<std::pair<long long, long long>, std::vector<std::pair<Point, Entry>>> cells;
  double quantum;

  explicit TwinRegistry(double q) : quantum(q) {}

  Entry& slot(Point p, double eps) {
    const long long ix = static_cast<long long>(std::floor(p.x / quantum));
    const long long iy = static_cast<long long>(std::floor(p.y / quantum));
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = cells.find({ix + dx, iy + dy});
        if (it == cells.end()) continue;
        for (auto& [q, entry] : it->second) {
          if (coincident(q, p, eps)) return entry;
        }
      }
    }
    cells[{ix, iy}].emplace_back(p, Entry{});
    return cells[{ix, iy}].back().second;
  }
};

class RingAssembler {
 public:
  RingAssembler(Ring* ring, int ring_id, TwinRegistry* reg, const Tolerances& tol)
      : ring_(ring), ring_id_(ring_id), reg_(reg), tol_(tol) {}

  // Appends the start vertex of an edge plus its interior nodes.
  void add_plain_edge(const Edge& e) {
    append({e.start(), NodeTag::Vertex, false});
    if (e.is_arc()) append({e.appendix(), NodeTag::Appendix, false});
  }

  // Appends a chain produced by split/merge helpers, dropping its final
  // node (the next edge supplies it).
  void add_chain(const std::vector<NodeSpec>& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) append(chain[i]);
  }

  void append(const NodeSpec& spec) {
    Node* n = ring_->append(spec.pt, spec.tag, spec.crossing);
    if (spec.crossing) {
      auto& entry = reg_->slot(spec.pt, tol_.eps_pt);
      Node*& mine = (ring_id_ == 1) ? entry.first : entry.second;
      if (mine) fail(Errc::InternalError, "crossing filed twice in one ring");
      mine = n;
    }
  }

 private:
  Ring* ring_;
  int ring_id_;
  TwinRegistry* reg_;
  const Tolerances& tol_;
};

// Chain for an ordinary (tri = 0) edge carrying intersections.
std::vector<NodeSpec> split_chain(const Edge& e, const std::vector<Point>& xsecs,
                                  const Tolerances& tol, RelinkStats* stats) {
  if (e.is_arc()) {
    int fresh = 0;
    std::vector<NodeSpec> chain = insert_appendix_points(e, xsecs, tol, &fresh);
    if (stats) stats->appendix_counts.emplace_back(static_cast<int>(xsecs.size()), fresh);
    return chain;
  }
  std::vector<NodeSpec> chain;
  chain.push_back({e.start(), NodeTag::Vertex, false});
  for (std::size_t i = 0; i < xsecs.size(); ++i)
    chain.push_back({xsecs[i], NodeTag::Vertex, true});
  chain.push_back({e.end(), NodeTag::Vertex, false});
  return chain;
}

void build_ring(const ArcPolygon& poly, const SeqList& list, int ring_id, Ring* out,
                TwinRegistry* reg, const Tolerances& tol, RelinkStats* stats) {
  RingAssembler assembler(out, ring_id, reg, tol);
  const std::vector<Edge>& edges = poly.edges();
  std::size_t j = 0;  // cursor into the sequence list
  for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
    const Edge& e = edges[ei];
    const bool related = j < list.items.size() && list.items[j].origin == ei;
    if (!related) {
      assembler.add_plain_edge(e);
      continue;
    }
    const SeqItem& item = list.items[j];
    if (item.tri == 0) {
      if (item.xsecs.empty()) {
        assembler.add_plain_edge(e);
      } else {
        for (const Point& q : item.xsecs) {
          if (coincident(q, e.start(), tol.eps_pt) || coincident(q, e.end(), tol.eps_pt))
            fail(Errc::DegenerateConfiguration, "intersection at an original vertex");
        }
        assembler.add_chain(split_chain(e, item.xsecs, tol, stats));
      }
      ++j;
      continue;
    }
    // Maximal run of pieces decomposed from this edge.
    std::vector<SeqItem> run;
    const int tri = item.tri;
    while (j < list.items.size() && list.items[j].origin == ei && list.items[j].tri == tri) {
      run.push_back(list.items[j]);
      ++j;
    }
    std::optional<std::vector<NodeSpec>> merged = merge_run(run, e, tol, stats);
    if (!merged) {
      assembler.add_plain_edge(e);  // discard: original edge, original appendix
    } else {
      assembler.add_chain(*merged);
    }
  }
}

}  // namespace

NewRings construct_new_linked_lists(const ArcPolygon& p1, const ArcPolygon& p2,
                                    const SeqList& s1, const SeqList& s2,
                                    const RelatedEdgeSet& rel, const Tolerances& tol,
                                    RelinkStats* stats) {
  NewRings out;
  TwinRegistry reg(tol.eps_pt * 4.0);
  (void)rel;
  build_ring(p1, s1, 1, &out.p1, &reg, tol, stats);
  build_ring(p2, s2, 2, &out.p2, &reg, tol, stats);

  int k = 0;
  for (auto& [cell, recs] : reg.cells) {
    for (auto& [pt, entry] : recs) {
      if (!entry.first || !entry.second)
        fail(Errc::InternalError, "unmatched crossing between the two rings");
      entry.first->twin = entry.second;
      entry.second->twin = entry.first;
      ++k;
    }
  }
  out.crossings = k;
  if (stats) stats->crossings = k;
  out.p1.check_links();
  out.p2.check_links();
  return out;
}

}  // namespace arcbool
