#include "arcbool/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace arcbool {

SeqList initialize_sequence_list(const std::vector<Edge>& related,
                                 const std::vector<int>& origin,
                                 const Tolerances& tol) {
  SeqList list;
  int temp = 1;
  for (std::size_t i = 0; i < related.size(); ++i) {
    const Edge& r = related[i];
    const int org = origin.empty() ? static_cast<int>(i) : origin[i];
    if (r.is_arc() && !is_x_monotone(r)) {
      for (const Edge& piece : decompose_arc(r, tol)) {
        SeqItem item;
        item.edge = piece;
        item.tri = temp;
        item.origin = org;
        list.items.push_back(std::move(item));
      }
      temp = (temp == 1) ? 2 : 1;
    } else {
      SeqItem item;
      item.edge = r;
      item.tri = 0;
      item.origin = org;
      list.items.push_back(std::move(item));
    }
  }
  return list;
}

namespace {

constexpr double kHuge = std::numeric_limits<double>::max();

struct SweepSeg {
  const Edge* edge = nullptr;
  bool from_p1 = true;  // polygon-of-origin label
  int index = -1;       // serial number into its sequence list
  Point pl, pr;         // endpoints in sweep order (left, right)
  bool vertical = false;

  // Per-event evaluation cache for the status comparator.
  mutable double cx = std::numeric_limits<double>::quiet_NaN();
  mutable double cy = 0.0, cslope = 0.0, ccurv = 0.0;

  void eval(double x) const {
    if (x == cx) return;
    cx = x;
    if (vertical) {
      cy = pl.y;  // verticals are keyed by their lower endpoint
      cslope = kHuge;
      ccurv = 0.0;
      return;
    }
    const double xc = std::clamp(x, pl.x, pr.x);
    if (!edge->is_arc()) {
      const double m = (pr.y - pl.y) / (pr.x - pl.x);
      cy = (xc == pl.x) ? pl.y : pl.y + m * (xc - pl.x);
      cslope = m;
      ccurv = 0.0;
      return;
    }
    const Point c = edge->center();
    const double r = edge->radius();
    const double dx = std::clamp(xc - c.x, -r, r);
    const double h = std::sqrt(std::max(0.0, r * r - dx * dx));
    const bool upper = edge->point_at(0.5).y >= c.y;
    cy = upper ? c.y + h : c.y - h;
    if (xc == pl.x) cy = pl.y;
    else if (xc == pr.x) cy = pr.y;
    const double dyc = cy - c.y;
    if (std::fabs(dyc) <= 1e-15 * r) {
      // Vertical tangent at an arc endpoint.
      cslope = (upper == (dx < 0.0)) ? kHuge : -kHuge;
      ccurv = 0.0;
    } else {
      cslope = -dx / dyc;
      ccurv = -(r * r) / (dyc * dyc * dyc);
    }
  }
};

enum class EventType { LeftEnd = 0, Crossing = 1, RightEnd = 2 };

struct Event {
  Point p;
  EventType type;
  SweepSeg* s = nullptr;
  SweepSeg* t = nullptr;  // crossing partner

  // Deterministic total order: (x, y, type rank, labels).
  bool operator>(const Event& o) const {
    if (p.x != o.p.x) return p.x > o.p.x;
    if (p.y != o.p.y) return p.y > o.p.y;
    if (type != o.type) return static_cast<int>(type) > static_cast<int>(o.type);
    if (s->from_p1 != o.s->from_p1) return s->from_p1 && !o.s->from_p1;
    return s->index > o.s->index;
  }
};

struct Sweeper {
  const SweepOptions& opts;
  const Tolerances& tol;
  SweepCounters* counters;
  SeqList* s1;
  SeqList* s2;

  std::vector<SweepSeg> segs;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue;

  double sweep_x = -kHuge;

  struct Cmp {
    const Sweeper* sw;
    bool operator()(const SweepSeg* a, const SweepSeg* b) const {
      a->eval(sw->sweep_x);
      b->eval(sw->sweep_x);
      if (std::fabs(a->cy - b->cy) > sw->tol.eps_pt) return a->cy < b->cy;
      if (a->cslope != b->cslope) return a->cslope < b->cslope;
      if (a->ccurv != b->ccurv) return a->ccurv < b->ccurv;
      if (a->from_p1 != b->from_p1) return !a->from_p1 && b->from_p1;
      return a->index < b->index;
    }
  };
  using Status = std::set<SweepSeg*, Cmp>;
  Status status;
  std::unordered_map<SweepSeg*, Status::iterator> handles;
  std::vector<SweepSeg*> active_verticals;

  // Pair-test memo (canonical pointer order).
  std::unordered_set<unsigned long long> tested;
  // Every crossing ever enqueued, quantized to eps_pt cells; detects
  // coincident crossings of distinct pairs.
  struct CrossRec {
    Point p;
    const SweepSeg* a;
    const SweepSeg* b;
  };
  std::unordered_map<unsigned long long, std::vector<CrossRec>> seen;

  Sweeper(const SweepOptions& o, const Tolerances& t, SweepCounters* c, SeqList* l1,
          SeqList* l2)
      : opts(o), tol(t), counters(c), s1(l1), s2(l2), status(Cmp{this}) {}

  static unsigned long long pair_key(const SweepSeg* a, const SweepSeg* b) {
    auto lo = reinterpret_cast<std::uintptr_t>(std::min(a, b));
    auto hi = reinterpret_cast<std::uintptr_t>(std::max(a, b));
    return (static_cast<unsigned long long>(lo) * 1000003ULL) ^ hi;
  }

  unsigned long long cell_key(double x, double y) const {
    const double q = tol.eps_pt;
    const long long ix = static_cast<long long>(std::floor(x / q));
    const long long iy = static_cast<long long>(std::floor(y / q));
    return static_cast<unsigned long long>(ix) * 0x9e3779b97f4a7c15ULL +
           static_cast<unsigned long long>(iy);
  }

  void build_segments() {
    auto add = [this](SeqList& list, bool from_p1) {
      for (int i = 0; i < static_cast<int>(list.items.size()); ++i) {
        const Edge& e = list.items[i].edge;
        SweepSeg seg;
        seg.edge = &list.items[i].edge;
        seg.from_p1 = from_p1;
        seg.index = i;
        Point a = e.start(), b = e.end();
        if (a.x > b.x || (a.x == b.x && a.y > b.y)) std::swap(a, b);
        seg.pl = a;
        seg.pr = b;
        seg.vertical = !e.is_arc() && std::fabs(a.x - b.x) <= tol.eps_pt;
        segs.push_back(seg);
      }
    };
    segs.reserve(s1->items.size() + s2->items.size());
    add(*s1, true);
    add(*s2, false);
    for (SweepSeg& s : segs) {
      queue.push(Event{s.pl, EventType::LeftEnd, &s, nullptr});
      queue.push(Event{s.pr, EventType::RightEnd, &s, nullptr});
    }
  }

  bool in_status(SweepSeg* s) const { return handles.count(s) != 0; }

  Status::iterator insert(SweepSeg* s) {
    auto [it, ok] = status.insert(s);
    if (!ok) fail(Errc::InternalError, "duplicate status entry");
    handles[s] = it;
    if (counters) ++counters->status_ops;
    return it;
  }

  void erase(SweepSeg* s) {
    auto h = handles.find(s);
    if (h == handles.end()) fail(Errc::InternalError, "erasing segment not in status");
    status.erase(h->second);
    handles.erase(h);
    if (counters) ++counters->status_ops;
  }

  void file(SeqList* list, int index, Point q, bool indexed) {
    SeqItem* item = nullptr;
    if (indexed) {
      item = &list->items[index];
    } else {
      // Unlabeled variant: scan for the item owning this edge.
      for (SeqItem& cand : list->items) {
        if (point_on_edge(q, cand.edge, tol)) {
          const double t = cand.edge.param_of(q);
          if (t >= -tol.eps_param && t <= 1.0 + tol.eps_param) {
            item = &cand;
            break;
          }
        }
      }
      if (!item) fail(Errc::InternalError, "no sequence item owns the intersection");
    }
    const double t = item->edge.param_of(q);
    auto pos = std::lower_bound(item->params.begin(), item->params.end(), t);
    const std::size_t at = static_cast<std::size_t>(pos - item->params.begin());
    // Already filed (the unlabeled variant may re-detect a crossing).
    if (at < item->params.size() && coincident(item->xsecs[at], q, tol.eps_pt)) return;
    if (at > 0 && coincident(item->xsecs[at - 1], q, tol.eps_pt)) return;
    item->params.insert(pos, t);
    item->xsecs.insert(item->xsecs.begin() + at, q);
    if (counters) ++counters->crossings;
  }

  void enqueue_crossing(Point q, SweepSeg* a, SweepSeg* b, const Event& current) {
    // Only positions strictly after the current event can still be swapped.
    if (q.x < current.p.x + tol.eps_pt &&
        !(std::fabs(q.x - current.p.x) <= tol.eps_pt && q.y > current.p.y + tol.eps_pt))
      return;
    auto& bucket = seen[cell_key(q.x, q.y)];
    for (const CrossRec& rec : bucket) {
      if (coincident(rec.p, q, tol.eps_pt)) {
        if ((rec.a == a && rec.b == b) || (rec.a == b && rec.b == a)) return;
        fail(Errc::DegenerateConfiguration, "coincident crossings of distinct edge pairs");
      }
    }
    bucket.push_back({q, a, b});
    queue.push(Event{q, EventType::Crossing, a, b});
  }

  void pair_test(SweepSeg* a, SweepSeg* b, const Event& current) {
    if (!a || !b || a == b) return;
    if (a->from_p1 == b->from_p1) {
      if (opts.suppress_same_origin) return;
      if (counters) {
        ++counters->pair_tests;
        ++counters->same_polygon_tests;
      }
      // Same-polygon reports are discarded; edges of a simple polygon touch
      // only at shared vertices.
      intersect_edges(*a->edge, *b->edge, tol);
      return;
    }
    if (opts.memoize_pairs) {
      if (!tested.insert(pair_key(a, b)).second) return;
    }
    if (counters) ++counters->pair_tests;
    const std::vector<Point> pts = intersect_edges(*a->edge, *b->edge, tol);
    for (const Point& q : pts) {
      for (const SweepSeg* s : {static_cast<const SweepSeg*>(a), static_cast<const SweepSeg*>(b)}) {
        if (coincident(q, s->pl, tol.eps_pt) || coincident(q, s->pr, tol.eps_pt))
          fail(Errc::DegenerateConfiguration,
               "intersection coincides with a segment endpoint");
      }
      SweepSeg* p1seg = a->from_p1 ? a : b;
      SweepSeg* p2seg = a->from_p1 ? b : a;
      file(s1, p1seg->index, q, opts.indexed_filing);
      file(s2, p2seg->index, q, opts.indexed_filing);
      enqueue_crossing(q, a, b, current);
    }
  }

  SweepSeg* above(Status::iterator it) {
    auto nx = std::next(it);
    return nx == status.end() ? nullptr : *nx;
  }

  SweepSeg* below(Status::iterator it) {
    return it == status.begin() ? nullptr : *std::prev(it);
  }

  void handle_left(SweepSeg* s, const Event& ev) {
    auto it = insert(s);
    if (s->vertical) {
      // A vertical finds all of its crossers in one pass: every segment
      // whose status key lies within its y-extent, plus the live verticals
      // at the same x.
      for (SweepSeg* v : active_verticals) pair_test(s, v, ev);
      active_verticals.push_back(s);
      if (SweepSeg* b = below(it)) pair_test(s, b, ev);
      const double yhi = s->pr.y + tol.eps_pt;
      for (auto up = std::next(it); up != status.end(); ++up) {
        (*up)->eval(sweep_x);
        if ((*up)->cy > yhi) break;
        pair_test(s, *up, ev);
      }
      return;
    }
    if (SweepSeg* b = below(it)) pair_test(s, b, ev);
    if (SweepSeg* a = above(it)) pair_test(s, a, ev);
  }

  void handle_right(SweepSeg* s, const Event& ev) {
    auto it = handles.find(s);
    if (it == handles.end()) fail(Errc::InternalError, "right endpoint of unknown segment");
    SweepSeg* b = below(it->second);
    SweepSeg* a = above(it->second);
    erase(s);
    if (s->vertical) {
      active_verticals.erase(std::find(active_verticals.begin(), active_verticals.end(), s));
    }
    pair_test(b, a, ev);
  }

  void handle_crossing(const Event& ev) {
    SweepSeg* s = ev.s;
    SweepSeg* t = ev.t;
    if (!in_status(s) || !in_status(t)) return;
    // A crossing on a vertical needs no swap: the vertical leaves the status
    // at this same x and discovered its crossers on insertion.
    if (s->vertical || t->vertical) return;
    erase(s);
    erase(t);
    // Reinsertion compares at the crossing x; the slope tie-break orders the
    // pair as it stands just right of the crossing.
    auto its = insert(s);
    auto itt = insert(t);
    SweepSeg* up = (Cmp{this}(s, t)) ? t : s;
    SweepSeg* dn = (up == s) ? t : s;
    auto itu = (up == s) ? its : itt;
    auto itd = (dn == s) ? its : itt;
    if (SweepSeg* a = above(itu)) pair_test(up, a, ev);
    if (SweepSeg* b = below(itd)) pair_test(dn, b, ev);
  }

  void run() {
    build_segments();
    while (!queue.empty()) {
      Event ev = queue.top();
      queue.pop();
      if (counters) ++counters->events;
      sweep_x = ev.p.x;
      switch (ev.type) {
        case EventType::LeftEnd: handle_left(ev.s, ev); break;
        case EventType::RightEnd: handle_right(ev.s, ev); break;
        case EventType::Crossing: handle_crossing(ev); break;
      }
    }
    if (!status.empty()) fail(Errc::InternalError, "segments left in sweep status");
  }
};

}  // namespace

void run_sweep(SeqList& s1, SeqList& s2, const SweepOptions& opts, const Tolerances& tol,
               SweepCounters* counters) {
  Sweeper sw(opts, tol, counters, &s1, &s2);
  sw.run();
}

SequenceLists construct_sequence_lists(const ArcPolygon& p1, const ArcPolygon& p2,
                                       const Tolerances& tol, SweepCounters* counters) {
  SequenceLists out;
  out.related = select_related(p1, p2, tol);
  out.s1 = initialize_sequence_list(out.related.r1, out.related.origin1, tol);
  out.s2 = initialize_sequence_list(out.related.r2, out.related.origin2, tol);
  run_sweep(out.s1, out.s2, SweepOptions{}, tol, counters);
  return out;
}

}  // namespace arcbool
