#include "arcbool/geometry.hpp"

#include <algorithm>
#include <limits>

namespace arcbool {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

double norm_angle(double a) {
  double r = std::fmod(a, kTau);
  if (r < 0.0) r += kTau;
  return r;
}

double ccw_delta(double a, double b) { return norm_angle(b - a); }

void Box::expand(Point p) {
  xmin = std::min(xmin, p.x);
  xmax = std::max(xmax, p.x);
  ymin = std::min(ymin, p.y);
  ymax = std::max(ymax, p.y);
}

void Box::expand(const Box& b) {
  xmin = std::min(xmin, b.xmin);
  xmax = std::max(xmax, b.xmax);
  ymin = std::min(ymin, b.ymin);
  ymax = std::max(ymax, b.ymax);
}

bool Box::overlaps(const Box& b, double slack) const {
  return xmin <= b.xmax + slack && b.xmin <= xmax + slack &&
         ymin <= b.ymax + slack && b.ymin <= ymax + slack;
}

Edge Edge::segment(Point a, Point b, const Tolerances& tol) {
  if (!finite(a) || !finite(b)) fail(Errc::InvalidEdge, "non-finite segment endpoint");
  if (coincident(a, b, tol.eps_pt)) fail(Errc::InvalidEdge, "degenerate segment (start == end)");
  Edge e;
  e.kind_ = EdgeKind::Segment;
  e.start_ = a;
  e.end_ = b;
  return e;
}

Edge Edge::arc(Point a, Point mid, Point b, const Tolerances& tol) {
  if (!finite(a) || !finite(mid) || !finite(b)) fail(Errc::InvalidEdge, "non-finite arc point");
  if (coincident(a, b, tol.eps_pt) || coincident(a, mid, tol.eps_pt) ||
      coincident(mid, b, tol.eps_pt)) {
    fail(Errc::InvalidEdge, "arc points not pairwise distinct");
  }
  // Circumcenter via the perpendicular bisectors of (a, mid) and (mid, b).
  const Point u = mid - a;
  const Point v = b - mid;
  const double den = 2.0 * cross(u, v);
  const double scale = std::max({norm(u), norm(v), 1.0});
  if (std::fabs(den) <= tol.eps_rel * scale * scale * 16.0)
    fail(Errc::InvalidEdge, "arc points are collinear");
  const Point ma = 0.5 * (a + mid);
  const Point mb = 0.5 * (mid + b);
  // Solve ma + s*perp(u) = mb + t*perp(v).
  const double s = (dot(mb - ma, v) * 2.0) / den;
  Edge e;
  e.kind_ = EdgeKind::Arc;
  e.start_ = a;
  e.end_ = b;
  e.appendix_ = mid;
  e.center_ = ma + s * Point{-u.y, u.x};
  e.radius_ = dist(e.center_, a);

  const double as = norm_angle(std::atan2(a.y - e.center_.y, a.x - e.center_.x));
  const double am = norm_angle(std::atan2(mid.y - e.center_.y, mid.x - e.center_.x));
  const double ae = norm_angle(std::atan2(b.y - e.center_.y, b.x - e.center_.x));
  const double da = ccw_delta(as, am);
  const double de = ccw_delta(as, ae);
  e.start_angle_ = as;
  // Travelling counter-clockwise from the start we reach the appendix before
  // the end iff the arc itself runs counter-clockwise.
  e.sweep_ = (da < de) ? de : de - kTau;
  if (std::fabs(e.sweep_) < tol.eps_param) fail(Errc::InvalidEdge, "zero-sweep arc");
  return e;
}

Edge Edge::arc_on_circle(Point center, double radius, Point a, Point b, bool ccw,
                         const Tolerances& tol) {
  if (!finite(a) || !finite(b) || !finite(center) || !(radius > 0.0))
    fail(Errc::InvalidEdge, "bad on-circle arc parameters");
  Edge e;
  e.kind_ = EdgeKind::Arc;
  e.start_ = a;
  e.end_ = b;
  e.center_ = center;
  e.radius_ = radius;
  const double as = norm_angle(std::atan2(a.y - center.y, a.x - center.x));
  const double ae = norm_angle(std::atan2(b.y - center.y, b.x - center.x));
  e.start_angle_ = as;
  e.sweep_ = ccw ? ccw_delta(as, ae) : -ccw_delta(ae, as);
  if (std::fabs(e.sweep_) < tol.eps_param) fail(Errc::InvalidEdge, "zero-sweep arc");
  const double mid = as + 0.5 * e.sweep_;
  e.appendix_ = {center.x + radius * std::cos(mid), center.y + radius * std::sin(mid)};
  return e;
}

Point Edge::appendix() const {
  if (!is_arc()) fail(Errc::InvalidEdge, "appendix() on a segment");
  return appendix_;
}

Point Edge::center() const {
  if (!is_arc()) fail(Errc::InvalidEdge, "center() on a segment");
  return center_;
}

double Edge::radius() const {
  if (!is_arc()) fail(Errc::InvalidEdge, "radius() on a segment");
  return radius_;
}

double Edge::start_angle() const {
  if (!is_arc()) fail(Errc::InvalidEdge, "start_angle() on a segment");
  return start_angle_;
}

double Edge::sweep() const {
  if (!is_arc()) fail(Errc::InvalidEdge, "sweep() on a segment");
  return sweep_;
}

Point Edge::point_at(double t) const {
  if (t <= 0.0) return start_;
  if (t >= 1.0) return end_;
  if (kind_ == EdgeKind::Segment) return start_ + t * (end_ - start_);
  const double ang = start_angle_ + t * sweep_;
  return {center_.x + radius_ * std::cos(ang), center_.y + radius_ * std::sin(ang)};
}

double Edge::param_of(Point p) const {
  if (kind_ == EdgeKind::Segment) {
    const Point v = end_ - start_;
    return dot(p - start_, v) / dot(v, v);
  }
  const double raw = (sweep_ > 0.0) ? ccw_delta(start_angle_, angle_of(p))
                                    : ccw_delta(angle_of(p), start_angle_);
  double t = raw / std::fabs(sweep_);
  // Points just behind the start wrap to raw ~ 2*pi; map them back near 0.
  if (t > 1.0) {
    const double back = (kTau - raw) / std::fabs(sweep_);
    if (back < t - 1.0) t = -back;
  }
  return t;
}

double Edge::angle_of(Point p) const {
  if (!is_arc()) fail(Errc::InvalidEdge, "angle_of() on a segment");
  return norm_angle(std::atan2(p.y - center_.y, p.x - center_.x));
}

Edge Edge::reversed() const {
  Edge e = *this;
  std::swap(e.start_, e.end_);
  if (is_arc()) {
    e.start_angle_ = norm_angle(start_angle_ + sweep_);
    e.sweep_ = -sweep_;
  }
  return e;
}

namespace {

// Shared angular slack for the x-monotonicity classification and the
// decomposition cuts; keeps the two consistent under round-off from
// re-derived piece centers.
constexpr double kAngSlack = 1e-12;

// True when angle a lies in the open angular interior of the arc.
bool angle_strictly_inside(const Edge& arc, double a, double ang_eps) {
  const double sw = arc.sweep();
  const double raw = (sw > 0.0) ? ccw_delta(arc.start_angle(), a)
                                : ccw_delta(a, arc.start_angle());
  return raw > ang_eps && raw < std::fabs(sw) - ang_eps;
}

// True when angle a lies on the closed arc, with angular slack.
bool angle_on_arc(const Edge& arc, double a, double ang_eps) {
  const double sw = arc.sweep();
  const double raw = (sw > 0.0) ? ccw_delta(arc.start_angle(), a)
                                : ccw_delta(a, arc.start_angle());
  return raw <= std::fabs(sw) + ang_eps || raw >= kTau - ang_eps;
}

Edge sub_arc(const Edge& arc, Point a, Point b) {
  return Edge::arc_on_circle(arc.center(), arc.radius(), a, b, arc.sweep() > 0.0);
}

}  // namespace

Box edge_bbox(const Edge& e) {
  Box b{e.start().x, e.start().x, e.start().y, e.start().y};
  b.expand(e.end());
  if (!e.is_arc()) return b;
  const Point c = e.center();
  const double r = e.radius();
  const double extremes[4] = {0.0, kPi / 2.0, kPi, 3.0 * kPi / 2.0};
  for (double a : extremes) {
    if (angle_strictly_inside(e, a, 0.0))
      b.expand(Point{c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return b;
}

bool is_x_monotone(const Edge& e) {
  if (!e.is_arc()) return true;
  // X-extreme circle angles are 0 and pi; an arc is x-monotone iff neither
  // lies strictly inside its angular span.
  return !angle_strictly_inside(e, 0.0, kAngSlack) && !angle_strictly_inside(e, kPi, kAngSlack);
}

std::vector<Edge> decompose_arc(const Edge& e, const Tolerances& tol) {
  if (!e.is_arc()) return {e};
  (void)tol;
  std::vector<double> cuts;
  for (double a : {0.0, kPi}) {
    if (angle_strictly_inside(e, a, kAngSlack)) cuts.push_back(a);
  }
  if (cuts.empty()) {
    // Already x-monotone; re-appendix at the angular midpoint.
    return {sub_arc(e, e.start(), e.end())};
  }
  const Point c = e.center();
  const double r = e.radius();
  std::vector<std::pair<double, Point>> splits;  // (param, point)
  for (double a : cuts) {
    Point p{c.x + r * std::cos(a), c.y + r * std::sin(a)};
    splits.emplace_back(e.param_of(p), p);
  }
  std::sort(splits.begin(), splits.end(),
            [](const auto& l, const auto& rr) { return l.first < rr.first; });
  std::vector<Edge> out;
  Point prev = e.start();
  for (const auto& [t, p] : splits) {
    out.push_back(sub_arc(e, prev, p));
    prev = p;
  }
  out.push_back(sub_arc(e, prev, e.end()));
  return out;
}

namespace {

struct SpanCheck {
  const Edge& e;
  const Tolerances& tol;

  bool contains(Point p) const {
    if (e.kind() == EdgeKind::Segment) {
      const double len = e.chord_length();
      const double teps = std::max(tol.eps_param, tol.eps_pt / len);
      const double t = e.param_of(p);
      return t >= -teps && t <= 1.0 + teps;
    }
    const double ang_eps = std::max(tol.eps_param, tol.eps_pt / e.radius());
    return angle_on_arc(e, e.angle_of(p), ang_eps);
  }
};

void push_dedup(std::vector<Point>& pts, Point p, double eps) {
  for (const Point& q : pts)
    if (coincident(p, q, eps)) return;
  pts.push_back(p);
}

std::vector<Point> seg_seg(const Edge& a, const Edge& b, const Tolerances& tol) {
  const Point p = a.start(), r = a.end() - a.start();
  const Point q = b.start(), s = b.end() - b.start();
  const double den = cross(r, s);
  const double scale = norm(r) * norm(s);
  if (std::fabs(den) <= 1e-14 * scale) {
    // Parallel. Overlapping collinear segments are unsupported.
    if (std::fabs(cross(q - p, r)) <= tol.eps_pt * norm(r)) {
      const double rr = dot(r, r);
      double t0 = dot(q - p, r) / rr;
      double t1 = dot(q + s - p, r) / rr;
      if (t0 > t1) std::swap(t0, t1);
      const double teps = tol.eps_pt / norm(r);
      if (std::min(t1, 1.0) - std::max(t0, 0.0) > teps)
        fail(Errc::OverlapUnsupported, "collinear segment overlap");
    }
    return {};
  }
  const double t = cross(q - p, s) / den;
  const double u = cross(q - p, r) / den;
  const double ta = std::max(tol.eps_param, tol.eps_pt / norm(r));
  const double tb = std::max(tol.eps_param, tol.eps_pt / norm(s));
  if (t < -ta || t > 1.0 + ta || u < -tb || u > 1.0 + tb) return {};
  return {p + t * r};
}

std::vector<Point> circle_circle(Point c1, double r1, Point c2, double r2,
                                 const Tolerances& tol) {
  const double d = dist(c1, c2);
  if (d > r1 + r2 || d < std::fabs(r1 - r2)) return {};
  const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
  const double h2 = r1 * r1 - a * a;
  if (h2 <= 0.0) return {};
  const double h = std::sqrt(h2);
  // Contact shorter than eps_pt is a tangency, not a pair of crossings.
  if (2.0 * h <= tol.eps_pt) return {};
  const Point u = (1.0 / d) * (c2 - c1);
  const Point m = c1 + a * u;
  const Point n{-u.y, u.x};
  return {m + h * n, m - h * n};
}

std::vector<Point> arc_arc(const Edge& a, const Edge& b, const Tolerances& tol) {
  const double rmax = std::max(a.radius(), b.radius());
  if (coincident(a.center(), b.center(), tol.eps_pt) &&
      std::fabs(a.radius() - b.radius()) <= tol.eps_rel * rmax + tol.eps_pt) {
    // Co-circular arcs: positive-length angular overlap is unsupported;
    // endpoint touches are reported as single points.
    const double ang_eps = std::max(tol.eps_param, tol.eps_pt / rmax);
    auto interval = [](const Edge& e) {
      const double sw = e.sweep();
      const double lo = (sw > 0.0) ? e.start_angle() : norm_angle(e.start_angle() + sw);
      return std::pair<double, double>{lo, std::fabs(sw)};
    };
    const auto [lo1, len1] = interval(a);
    const auto [lo2, len2] = interval(b);
    // Overlap of [0, len1] with the second interval shifted into the frame
    // of the first; handle the wrap by testing both representations.
    const double off = ccw_delta(lo1, lo2);
    double best = 0.0;
    for (double start : {off, off - kTau}) {
      const double s = std::max(0.0, start);
      const double e2 = std::min(len1, start + len2);
      best = std::max(best, e2 - s);
    }
    if (best > ang_eps) fail(Errc::OverlapUnsupported, "co-circular arc overlap");
    std::vector<Point> out;
    for (Point p : {a.start(), a.end()}) {
      if (point_on_edge(p, b, tol)) push_dedup(out, p, tol.eps_pt);
    }
    for (Point p : {b.start(), b.end()}) {
      if (point_on_edge(p, a, tol)) push_dedup(out, p, tol.eps_pt);
    }
    return out;
  }
  auto cand = circle_circle(a.center(), a.radius(), b.center(), b.radius(), tol);
  std::vector<Point> out;
  SpanCheck sa{a, tol}, sb{b, tol};
  for (Point p : cand) {
    if (sa.contains(p) && sb.contains(p)) push_dedup(out, p, tol.eps_pt);
  }
  return out;
}

std::vector<Point> seg_arc(const Edge& seg, const Edge& arc, const Tolerances& tol) {
  const Point p0 = seg.start();
  const Point v = seg.end() - seg.start();
  const Point c = arc.center();
  const double r = arc.radius();
  const double aa = dot(v, v);
  const double bb = 2.0 * dot(v, p0 - c);
  const double cc = dot(p0 - c, p0 - c) - r * r;
  const double disc = bb * bb - 4.0 * aa * cc;
  if (disc <= 0.0) return {};
  const double sq = std::sqrt(disc);
  // Chord shorter than eps_pt is a tangential touch.
  if (sq / aa * norm(v) <= tol.eps_pt) return {};
  std::vector<Point> out;
  SpanCheck ss{seg, tol}, sa{arc, tol};
  for (double t : {(-bb - sq) / (2.0 * aa), (-bb + sq) / (2.0 * aa)}) {
    const Point p = p0 + t * v;
    if (ss.contains(p) && sa.contains(p)) push_dedup(out, p, tol.eps_pt);
  }
  return out;
}

}  // namespace

std::vector<Point> intersect_edges(const Edge& a, const Edge& b, const Tolerances& tol) {
  if (!a.is_arc() && !b.is_arc()) return seg_seg(a, b, tol);
  if (a.is_arc() && b.is_arc()) return arc_arc(a, b, tol);
  return a.is_arc() ? seg_arc(b, a, tol) : seg_arc(a, b, tol);
}

double y_at_x(const Edge& e, double x, const Tolerances& tol) {
  const Box b = edge_bbox(e);
  if (x < b.xmin - tol.eps_pt || x > b.xmax + tol.eps_pt)
    fail(Errc::OutOfSpan, "x outside edge span");
  const double cx = std::clamp(x, b.xmin, b.xmax);
  if (!e.is_arc()) {
    const Point s = e.start(), t = e.end();
    if (std::fabs(t.x - s.x) <= tol.eps_pt) return 0.5 * (s.y + t.y);
    return s.y + (t.y - s.y) * (cx - s.x) / (t.x - s.x);
  }
  if (!is_x_monotone(e)) fail(Errc::OutOfSpan, "y_at_x needs an x-monotone edge");
  const Point c = e.center();
  const double r = e.radius();
  const double dx = std::clamp(cx - c.x, -r, r);
  const double h = std::sqrt(std::max(0.0, r * r - dx * dx));
  // An x-monotone arc lies entirely in the upper or lower half of its
  // circle; the midpoint picks the half.
  const Point mid = e.point_at(0.5);
  return (mid.y >= c.y) ? c.y + h : c.y - h;
}

bool point_on_edge(Point p, const Edge& e, const Tolerances& tol) {
  if (!e.is_arc()) {
    const Point s = e.start(), v = e.end() - e.start();
    const double t = std::clamp(dot(p - s, v) / dot(v, v), 0.0, 1.0);
    return dist(p, s + t * v) <= tol.eps_pt;
  }
  if (std::fabs(dist(p, e.center()) - e.radius()) > tol.eps_pt) return false;
  const double ang_eps = std::max(tol.eps_param, tol.eps_pt / e.radius());
  if (angle_on_arc(e, e.angle_of(p), ang_eps)) return true;
  return coincident(p, e.start(), tol.eps_pt) || coincident(p, e.end(), tol.eps_pt);
}

std::vector<Edge> split_edge_at(const Edge& e, const std::vector<Point>& pts,
                                const Tolerances& tol) {
  if (pts.empty()) return {e};
  double prev_t = 0.0;
  const double teps = (e.kind() == EdgeKind::Segment)
                          ? std::max(tol.eps_param, tol.eps_pt / e.chord_length())
                          : std::max(tol.eps_param,
                                     tol.eps_pt / (e.radius() * std::fabs(e.sweep())));
  for (const Point& p : pts) {
    if (!point_on_edge(p, e, tol)) fail(Errc::PointNotOnEdge, "split point off the edge");
    const double t = e.param_of(p);
    if (t <= teps || t >= 1.0 - teps)
      fail(Errc::PointNotOnEdge, "split point coincides with an edge endpoint");
    if (t <= prev_t) fail(Errc::UnsortedSplitPoints, "split points not strictly increasing");
    prev_t = t;
  }
  std::vector<Edge> out;
  Point prev = e.start();
  for (const Point& p : pts) {
    out.push_back(e.is_arc() ? sub_arc(e, prev, p) : Edge::segment(prev, p, tol));
    prev = p;
  }
  out.push_back(e.is_arc() ? sub_arc(e, prev, e.end()) : Edge::segment(prev, e.end(), tol));
  return out;
}

}  // namespace arcbool
