#pragma once

#include <cmath>
#include <vector>

#include "arcbool/error.hpp"

namespace arcbool {

// Tolerance knobs shared by every geometric predicate. eps_pt is an absolute
// point-coincidence distance; eps_rel is relative for metric identities
// (radii, concyclicity); eps_param is parametric slack along an edge.
struct Tolerances {
  double eps_pt = 1e-9;
  double eps_rel = 1e-12;
  double eps_param = 1e-12;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool coincident(Point a, Point b, double eps) { return dist(a, b) <= eps; }

struct Box {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;

  void expand(Point p);
  void expand(const Box& b);
  bool overlaps(const Box& b, double slack = 0.0) const;
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

enum class EdgeKind { Segment, Arc };

// A polygon edge: a straight segment or a circular arc. Arcs carry the
// start/appendix/end triple that selects one of the two arcs through the
// endpoints; center, radius and the signed angular sweep are derived once
// at construction and cached.
class Edge {
 public:
  // Zero-length placeholder; build real edges via segment() / arc().
  Edge() = default;

  static Edge segment(Point a, Point b, const Tolerances& tol = {});
  static Edge arc(Point a, Point mid, Point b, const Tolerances& tol = {});
  // Arc on a known circle between two points already on it, travelling
  // counter-clockwise iff ccw; the appendix lands on the angular midpoint.
  // Keeps sub-arcs of a common parent exactly concentric.
  static Edge arc_on_circle(Point center, double radius, Point a, Point b, bool ccw,
                            const Tolerances& tol = {});

  EdgeKind kind() const { return kind_; }
  bool is_arc() const { return kind_ == EdgeKind::Arc; }
  Point start() const { return start_; }
  Point end() const { return end_; }
  Point appendix() const;  // arcs only
  Point center() const;    // arcs only
  double radius() const;   // arcs only

  // Angle of the start point at the center, in [0, 2*pi).
  double start_angle() const;
  // Signed angular extent, positive when the arc runs counter-clockwise
  // around its center; magnitude in (0, 2*pi).
  double sweep() const;

  // Point at normalized parameter t in [0, 1]; t = 0 and t = 1 reproduce the
  // stored endpoints exactly.
  Point point_at(double t) const;
  // Parameter of a point assumed to lie on the supporting curve. For arcs the
  // result may fall slightly outside [0, 1] when the point is off the arc.
  double param_of(Point p) const;
  // Central angle of p, arcs only.
  double angle_of(Point p) const;
  // Reversed copy (start and end swapped, same curve).
  Edge reversed() const;

  double chord_length() const { return dist(start_, end_); }

 private:
  EdgeKind kind_ = EdgeKind::Segment;
  Point start_, end_, appendix_;
  Point center_{};
  double radius_ = 0.0;
  double start_angle_ = 0.0;
  double sweep_ = 0.0;
};

// Normalizes an angle into [0, 2*pi).
double norm_angle(double a);
// Counter-clockwise angular distance from a to b, in [0, 2*pi).
double ccw_delta(double a, double b);

Box edge_bbox(const Edge& e);
bool is_x_monotone(const Edge& e);

// Splits an arc at the interior points where the horizontal line through its
// center crosses it, yielding 1-3 x-monotone pieces, each re-appendixed at
// its angular midpoint. Segments pass through unchanged.
std::vector<Edge> decompose_arc(const Edge& e, const Tolerances& tol = {});

// All transversal crossing points of a and b (0-2 points). Tangential
// contacts are not reported. Throws OverlapUnsupported when the edges share
// a sub-curve of positive length.
std::vector<Point> intersect_edges(const Edge& a, const Edge& b, const Tolerances& tol = {});

// Unique y with (x, y) on an x-monotone edge; a vertical segment yields its
// midpoint y. Throws OutOfSpan when x misses the edge span by more than
// eps_pt.
double y_at_x(const Edge& e, double x, const Tolerances& tol = {});

bool point_on_edge(Point p, const Edge& e, const Tolerances& tol = {});

// Splits e at interior points sorted by parameter; arcs get a fresh appendix
// at the angular midpoint of every piece.
std::vector<Edge> split_edge_at(const Edge& e, const std::vector<Point>& pts,
                                const Tolerances& tol = {});

}  // namespace arcbool
