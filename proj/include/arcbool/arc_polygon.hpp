#pragma once

#include <memory>
#include <vector>

#include "arcbool/geometry.hpp"

namespace arcbool {

enum class NodeTag { Vertex, Appendix };
enum class EntryExit { None, Entry, Exit };

struct Node {
  Point pt;
  NodeTag tag = NodeTag::Vertex;
  bool crossing = false;
  EntryExit ee = EntryExit::None;
  bool visited = false;
  Node* prev = nullptr;
  Node* next = nullptr;
  Node* twin = nullptr;  // matching crossing node in the other ring
};

// Closed doubly-linked list of nodes; owns its nodes. Mutable while being
// built, treated as immutable afterwards.
class Ring {
 public:
  Ring() = default;
  Ring(Ring&&) noexcept = default;
  Ring& operator=(Ring&&) noexcept = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  Node* append(Point pt, NodeTag tag = NodeTag::Vertex, bool crossing = false);
  Node* head() const { return head_; }
  std::size_t size() const { return pool_.size(); }
  bool empty() const { return pool_.empty(); }

  std::vector<Node*> nodes() const;  // in ring order from head
  Ring clone() const;                // twin links are not copied
  void reverse();
  void check_links() const;  // throws InternalError on a broken ring

 private:
  std::vector<std::unique_ptr<Node>> pool_;
  Node* head_ = nullptr;
  Node* tail_ = nullptr;
};

// Edges of a closed ring: one per pair of consecutive non-appendix nodes,
// with at most one appendix node in between.
std::vector<Edge> ring_edges(const Ring& ring, const Tolerances& tol = {});

// Signed area: shoelace over the chord polygon plus the signed circular
// segment of every arc. Positive for counter-clockwise rings.
double ring_area(const Ring& ring, const Tolerances& tol = {});

enum class Side { Inside, Outside, OnBoundary };

// Horizontal ray-crossing parity against the edges of a closed ring, with
// bounded deterministic ray perturbation near vertices and arc tangencies.
Side point_in_ring(Point p, const Ring& ring, const Tolerances& tol = {});

struct PointRec {
  Point pt;
  NodeTag tag = NodeTag::Vertex;
};

// A simple counter-clockwise circular-arc polygon.
class ArcPolygon {
 public:
  // Validates structure, appendix consistency, orientation and simplicity.
  static ArcPolygon from_point_list(const std::vector<PointRec>& pts,
                                    const Tolerances& tol = {});
  // Skips the quadratic simplicity check; for generated/benchmark inputs.
  static ArcPolygon trusted(const std::vector<PointRec>& pts, const Tolerances& tol = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  std::vector<PointRec> to_point_list() const;

 private:
  ArcPolygon() = default;
  static ArcPolygon build(const std::vector<PointRec>& pts, const Tolerances& tol,
                          bool check_simple);
  Ring ring_;
  std::vector<Edge> edges_;
};

double area(const ArcPolygon& p, const Tolerances& tol = {});
Side point_in_polygon(Point p, const ArcPolygon& poly, const Tolerances& tol = {});

// One closed loop of a boolean result.
struct Circuit {
  struct Provenance {
    int source = 0;  // 1 or 2: originating ring
    NodeTag tag = NodeTag::Vertex;
    bool crossing = false;
  };
  Ring ring;
  std::vector<Provenance> provenance;
  bool reversed = false;  // true when the walk came out clockwise

  double area(const Tolerances& tol = {}) const { return ring_area(ring, tol); }
  std::vector<Edge> edges(const Tolerances& tol = {}) const { return ring_edges(ring, tol); }
};

enum class BoolOp { Intersection, Union, Difference };

struct BoolResult {
  BoolOp op = BoolOp::Intersection;
  std::vector<Circuit> circuits;
  bool empty() const { return circuits.empty(); }
};

const char* bool_op_name(BoolOp op);

}  // namespace arcbool
