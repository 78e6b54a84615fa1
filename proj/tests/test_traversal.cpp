#include <doctest.h>

#include <cmath>
#include <string>

#include "arcbool/boolean.hpp"
#include "arcbool/generator.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace arcbool;
using namespace arcbool::fixtures;

namespace {

const double kPi = 3.14159265358979323846;

std::string circuit_kinds(const Circuit& c) {
  std::string out;
  for (Node* n : c.ring.nodes())
    out += n->crossing ? 'x' : (n->tag == NodeTag::Appendix ? 'a' : 'v');
  return out;
}

struct Prepared {
  NewRings rings;
};

Prepared prepare(const ArcPolygon& a, const ArcPolygon& b) {
  SequenceLists seqs = construct_sequence_lists(a, b);
  Prepared p{construct_new_linked_lists(a, b, seqs.s1, seqs.s2, seqs.related)};
  if (p.rings.crossings > 0) assign_entry_exit(p.rings.p1, p.rings.p2, b);
  return p;
}

}  // namespace

TEST_CASE("entry/exit assignment alternates and anchors by containment") {
  ArcPolygon a = square_a(), b = square_b();
  Prepared p = prepare(a, b);
  std::vector<Node*> crossings;
  for (Node* n : p.rings.p1.nodes())
    if (n->crossing) crossings.push_back(n);
  REQUIRE(crossings.size() == 2);
  CHECK(dist(crossings[0]->pt, {2, 1}) == 0.0);
  CHECK(crossings[0]->ee == EntryExit::Entry);
  CHECK(crossings[1]->ee == EntryExit::Exit);
  CHECK(crossings[0]->twin->ee == EntryExit::Entry);

  // Alternation holds along both rings for the worked example too.
  Prepared w = prepare(worked_p1(), worked_p2());
  for (const Ring* ring : {&w.rings.p1, &w.rings.p2}) {
    EntryExit last = EntryExit::None;
    for (Node* n : ring->nodes()) {
      if (!n->crossing) continue;
      CHECK(n->ee != EntryExit::None);
      if (last != EntryExit::None) CHECK(n->ee != last);
      last = n->ee;
    }
  }
}

TEST_CASE("odd crossing counts are rejected") {
  ArcPolygon a = square_a(), b = square_b();
  SequenceLists seqs = construct_sequence_lists(a, b);
  NewRings rings = construct_new_linked_lists(a, b, seqs.s1, seqs.s2, seqs.related);
  // Forge a third crossing node to break the parity.
  for (Node* n : rings.p1.nodes()) {
    if (!n->crossing && n->tag == NodeTag::Vertex) {
      n->crossing = true;
      n->twin = rings.p2.nodes()[0];
      break;
    }
  }
  CHECK_THROWS_WITH_AS(assign_entry_exit(rings.p1, rings.p2, b),
                       doctest::Contains("OddCrossingCount"), Error);
}

TEST_CASE("offset squares: intersection, union, difference") {
  ArcPolygon a = square_a(), b = square_b();

  BoolResult inter = boolean_op(a, b, BoolOp::Intersection);
  REQUIRE(inter.circuits.size() == 1);
  CHECK(std::fabs(inter.circuits[0].area() - 1.0) < 1e-12);
  CHECK(circuit_kinds(inter.circuits[0]) == "xvxv");

  BoolResult uni = boolean_op(a, b, BoolOp::Union);
  REQUIRE(uni.circuits.size() == 1);
  CHECK(uni.circuits[0].ring.size() == 8);
  CHECK(std::fabs(uni.circuits[0].area() - 7.0) < 1e-12);

  BoolResult diff = boolean_op(a, b, BoolOp::Difference);
  REQUIRE(diff.circuits.size() == 1);
  CHECK(std::fabs(diff.circuits[0].area() - 3.0) < 1e-12);
  CHECK(diff.circuits[0].ring.size() == 6);
}

TEST_CASE("two unit circles: lens area in closed form") {
  ArcPolygon c1 = circle_at(0, 0), c2 = circle_at(1, 0);
  BoolResult inter = boolean_op(c1, c2, BoolOp::Intersection);
  REQUIRE(inter.circuits.size() == 1);
  const double lens = 2.0 * kPi / 3.0 - std::sqrt(3.0) / 2.0;
  CHECK(std::fabs(inter.circuits[0].area() - lens) < 1e-9);

  // Conservation across all three operations.
  BoolResult uni = boolean_op(c1, c2, BoolOp::Union);
  BoolResult diff = boolean_op(c1, c2, BoolOp::Difference);
  REQUIRE(uni.circuits.size() == 1);
  REQUIRE(diff.circuits.size() == 1);
  CHECK(std::fabs(uni.circuits[0].area() + inter.circuits[0].area() - 2.0 * kPi) < 1e-9);
  CHECK(std::fabs(diff.circuits[0].area() - (kPi - lens)) < 1e-9);
}

TEST_CASE("worked example: circuit node sequences") {
  ArcPolygon a = worked_p1(), b = worked_p2();

  BoolResult inter = boolean_op(a, b, BoolOp::Intersection);
  REQUIRE(inter.circuits.size() == 1);
  CHECK(circuit_kinds(inter.circuits[0]) == "xxxavx");

  BoolResult uni = boolean_op(a, b, BoolOp::Union);
  REQUIRE(uni.circuits.size() == 1);
  CHECK(uni.circuits[0].ring.size() == 13);
  CHECK(circuit_kinds(uni.circuits[0]) == "vxvvxvvaxvavx");

  BoolResult diff = boolean_op(a, b, BoolOp::Difference);
  REQUIRE(diff.circuits.size() == 2);
  CHECK(diff.circuits[0].ring.size() == 3);
  CHECK(circuit_kinds(diff.circuits[0]) == "vxx");
  CHECK(diff.circuits[1].ring.size() == 5);
  CHECK(circuit_kinds(diff.circuits[1]) == "vvaxx");

  // Conservation.
  const double sum = area(a) + area(b);
  CHECK(std::fabs(total_area(uni) + total_area(inter) - sum) < 1e-9 * sum);
  CHECK(std::fabs(total_area(diff) - (area(a) - total_area(inter))) < 1e-9 * sum);
}

TEST_CASE("crossing-free fallbacks: disjoint and containment") {
  ArcPolygon big = ArcPolygon::from_point_list({v(0, 0), v(10, 0), v(10, 10), v(0, 10)});
  ArcPolygon small = ArcPolygon::from_point_list({v(4, 4), v(6, 4), v(6, 6), v(4, 6)});
  ArcPolygon far = ArcPolygon::from_point_list({v(20, 0), v(22, 0), v(22, 2), v(20, 2)});
  ArcPolygon inside_overlap_box =
      ArcPolygon::from_point_list({v(11, 11), v(13, 11), v(13, 13), v(11, 13)});

  // Disjoint bounding boxes.
  CHECK(boolean_op(big, far, BoolOp::Intersection).empty());
  CHECK(boolean_op(big, far, BoolOp::Union).circuits.size() == 2);
  CHECK(boolean_op(big, far, BoolOp::Difference).circuits.size() == 1);

  // Containment: small inside big.
  BoolResult r = boolean_op(small, big, BoolOp::Intersection);
  REQUIRE(r.circuits.size() == 1);
  CHECK(std::fabs(r.circuits[0].area() - 4.0) < 1e-12);
  r = boolean_op(small, big, BoolOp::Union);
  REQUIRE(r.circuits.size() == 1);
  CHECK(std::fabs(r.circuits[0].area() - 100.0) < 1e-12);
  CHECK(boolean_op(small, big, BoolOp::Difference).empty());
  CHECK_THROWS_WITH_AS((void)boolean_op(big, small, BoolOp::Difference),
                       doctest::Contains("DifferenceHoleUnsupported"), Error);

  // Overlapping boxes, disjoint interiors.
  BoolResult sep = boolean_op(ArcPolygon::from_point_list({v(0, 0), v(12, 0), v(0, 12)}),
                              inside_overlap_box, BoolOp::Union);
  CHECK(sep.circuits.size() == 2);
}

TEST_CASE("union with a hole is rejected") {
  // A C-shaped polygon closed off by a bar: the union encloses a cavity.
  ArcPolygon c_shape = ArcPolygon::from_point_list({v(0, 0), v(10, 0), v(10, 2), v(3, 2),
                                                    v(3, 8), v(10, 8), v(10, 10), v(0, 10)});
  ArcPolygon bar = ArcPolygon::from_point_list({v(8, 1.5), v(11, 1.5), v(11, 8.5), v(8, 8.5)});
  CHECK_THROWS_WITH_AS((void)boolean_op(c_shape, bar, BoolOp::Union),
                       doctest::Contains("UnionHoleUnsupported"), Error);
}

TEST_CASE("difference across a crossing band yields two circuits") {
  ArcPolygon tall = ArcPolygon::from_point_list({v(4, 0), v(6, 0), v(6, 10), v(4, 10)});
  ArcPolygon wide = ArcPolygon::from_point_list({v(0, 3), v(10, 3), v(10, 7), v(0, 7)});
  BoolResult diff = boolean_op(wide, tall, BoolOp::Difference);
  REQUIRE(diff.circuits.size() == 2);
  CHECK(std::fabs(total_area(diff) - (40.0 - 8.0)) < 1e-9);

  BoolResult diff2 = boolean_op(tall, wide, BoolOp::Difference);
  REQUIRE(diff2.circuits.size() == 2);
  CHECK(std::fabs(total_area(diff2) - (20.0 - 8.0)) < 1e-9);
}

TEST_CASE("components without any subject vertex are still reached") {
  // The clip covers the whole subject square except a notch poking through
  // its bottom edge: the one difference circuit carries no subject vertex,
  // and the union has no subject vertex outside the clip to start from.
  ArcPolygon subject =
      ArcPolygon::from_point_list({v(0, 0), v(10, 0), v(10, 10), v(0, 10)});
  ArcPolygon notched = ArcPolygon::from_point_list(
      {v(-1, -1), v(3, -1), v(5, 2), v(7, -1), v(11, -1), v(11, 11), v(-1, 11)});

  BoolResult diff = boolean_op(subject, notched, BoolOp::Difference);
  REQUIRE(diff.circuits.size() == 1);
  CHECK(std::fabs(total_area(diff) - 8.0 / 3.0) < 1e-9);
  for (Node* n : diff.circuits[0].ring.nodes()) {
    const bool subject_vertex = !n->crossing && n->tag == NodeTag::Vertex &&
                                (n->pt.x == 0 || n->pt.x == 10) &&
                                (n->pt.y == 0 || n->pt.y == 10);
    CHECK_FALSE(subject_vertex);
  }

  BoolResult uni = boolean_op(subject, notched, BoolOp::Union);
  REQUIRE(uni.circuits.size() == 1);
  CHECK(std::fabs(total_area(uni) - (138.0 + 8.0 / 3.0)) < 1e-9);

  BoolResult inter = boolean_op(subject, notched, BoolOp::Intersection);
  REQUIRE(inter.circuits.size() == 1);
  CHECK(std::fabs(total_area(inter) - (100.0 - 8.0 / 3.0)) < 1e-9);
}

TEST_CASE("multi-circuit intersection") {
  // A wide rectangle against a W-shaped polygon dipping into it twice.
  ArcPolygon rect = ArcPolygon::from_point_list({v(0, 0), v(20, 0), v(20, 4), v(0, 4)});
  ArcPolygon w_shape = ArcPolygon::from_point_list(
      {v(2, 2), v(6, 2), v(8, 6), v(10, 2), v(14, 2), v(16, 6), v(18, 8), v(4, 8)});
  BoolResult inter = boolean_op(rect, w_shape, BoolOp::Intersection);
  CHECK(inter.circuits.size() == 2);
  // Every circuit's interior samples lie inside both inputs.
  oracles::TestRng rng(5);
  for (const Circuit& c : inter.circuits) {
    Box box = edge_bbox(c.edges()[0]);
    for (const Edge& e : c.edges()) box.expand(edge_bbox(e));
    int tested = 0;
    for (int i = 0; i < 2000 && tested < 50; ++i) {
      const Point p{rng.uniform(box.xmin, box.xmax), rng.uniform(box.ymin, box.ymax)};
      if (point_in_ring(p, c.ring) != Side::Inside) continue;
      ++tested;
      CHECK(point_in_polygon(p, rect) == Side::Inside);
      CHECK(point_in_polygon(p, w_shape) == Side::Inside);
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("property: area conservation and sample containment on random pairs") {
  oracles::TestRng rng(777);
  unsigned long long seed = 40000;
  int accepted = 0;
  while (accepted < 200) {
    const int n = 4 + static_cast<int>(rng.uniform() * 16);
    ArcPolygon a = generate_polygon(n, seed++, rng.uniform());
    ArcPolygon b = generate_polygon(n, seed++, rng.uniform());
    BoolResult inter, uni, diff;
    try {
      inter = boolean_op(a, b, BoolOp::Intersection);
      uni = boolean_op(a, b, BoolOp::Union);
      diff = boolean_op(a, b, BoolOp::Difference);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    const double aa = area(a), ab = area(b);
    const double scale = aa + ab;
    CHECK(std::fabs(total_area(uni) + total_area(inter) - scale) < 1e-9 * scale);
    CHECK(std::fabs(total_area(diff) - (aa - total_area(inter))) < 1e-9 * scale);

    // Circuits are counter-clockwise.
    for (const BoolResult* r : {&inter, &uni, &diff})
      for (const Circuit& c : r->circuits) CHECK(c.area() > 0.0);

    // Spot containment checks on the intersection.
    for (const Circuit& c : inter.circuits) {
      const auto edges = c.edges();
      Box box = edge_bbox(edges[0]);
      for (const Edge& e : edges) box.expand(edge_bbox(e));
      int tested = 0;
      for (int i = 0; i < 400 && tested < 10; ++i) {
        const Point p{rng.uniform(box.xmin, box.xmax), rng.uniform(box.ymin, box.ymax)};
        if (point_in_ring(p, c.ring) != Side::Inside) continue;
        if (point_in_polygon(p, a) == Side::OnBoundary) continue;
        if (point_in_polygon(p, b) == Side::OnBoundary) continue;
        ++tested;
        CHECK(point_in_polygon(p, a) == Side::Inside);
        CHECK(point_in_polygon(p, b) == Side::Inside);
      }
    }
  }
}
