#include <doctest.h>

#include <cmath>

#include "arcbool/related_edges.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace arcbool;
using namespace arcbool::fixtures;

TEST_CASE("mbr") {
  Box b = mbr(ArcPolygon::from_point_list({v(0, 0), v(1, 0), v(1, 1), v(0, 1)}));
  CHECK(b.xmin == doctest::Approx(0));
  CHECK(b.xmax == doctest::Approx(1));

  b = mbr(circle_at(0, 0));
  CHECK(b.xmin == doctest::Approx(-1));
  CHECK(b.xmax == doctest::Approx(1));
  CHECK(b.ymin == doctest::Approx(-1));
  CHECK(b.ymax == doctest::Approx(1));

  // The second manual polygon's top depends on its upper arc bulge; check
  // against brute-force boundary sampling.
  ArcPolygon p2 = bench_p2();
  b = mbr(p2);
  CHECK(b.xmin == doctest::Approx(20));
  CHECK(b.xmax == doctest::Approx(55));
  double ymax = -1e30, ymin = 1e30;
  for (const Point& q : oracles::sample_boundary(p2.ring(), 4096)) {
    ymax = std::max(ymax, q.y);
    ymin = std::min(ymin, q.y);
  }
  CHECK(b.ymax == doctest::Approx(ymax).epsilon(1e-6));
  CHECK(b.ymin == doctest::Approx(ymin).epsilon(1e-6));
}

TEST_CASE("effective_axis picks the narrow side of the overlap") {
  CHECK(effective_axis(Box{0, 10, 0, 1}, Box{5, 15, 0, 1}) == Axis::Y);
  CHECK(effective_axis(Box{0, 1, 0, 10}, Box{0, 1, 5, 15}) == Axis::X);
  CHECK(!effective_axis(Box{0, 1, 0, 1}, Box{5, 6, 5, 6}).has_value());
}

TEST_CASE("select_related on the offset squares") {
  ArcPolygon s1 = square_a();  // (0,0)..(2,2)
  ArcPolygon s2 = square_b();  // (1,1)..(3,3)
  RelatedEdgeSet r = select_related(s1, s2);
  // Overlap box is square, so the y band [1,2] applies: bottom edge of the
  // first square (y = 0) and top edge of the second (y = 3) are the only
  // non-related edges.
  REQUIRE(r.r1.size() == 3);
  REQUIRE(r.r2.size() == 3);
  CHECK(r.origin1 == std::vector<int>{1, 2, 3});
  CHECK(r.origin2 == std::vector<int>{0, 1, 3});

  // Identical polygons: every edge is related.
  RelatedEdgeSet all = select_related(s1, s1);
  CHECK(all.r1.size() == 4);
  CHECK(all.r2.size() == 4);

  CHECK_THROWS_AS(
      (void)select_related(s1, ArcPolygon::from_point_list({v(10, 10), v(12, 10), v(12, 12)})),
      Error);
}

TEST_CASE("select_related keeps only band edges in a side-by-side layout") {
  // Two hexagon-ish polygons side by side, overlapping in a thin x band.
  ArcPolygon left = ArcPolygon::from_point_list(
      {v(0, 0), v(8, 1), v(10, 5), v(8, 9), v(0, 10), v(-2, 5)});
  ArcPolygon right = ArcPolygon::from_point_list(
      {v(9.5, 4), v(18, 0), v(20, 5), v(18, 10), v(10, 9.5)});
  RelatedEdgeSet r = select_related(left, right);
  // Band is x in [9.5, 10]: the two rightmost edges of the left polygon and
  // the edges of the right polygon that reach x <= 10.
  CHECK(r.origin1 == std::vector<int>{1, 2});
  CHECK(r.origin2 == std::vector<int>{0, 3, 4});
}

TEST_CASE("process_related bounds and identity") {
  ArcPolygon s1 = square_a();
  RelatedEdgeSet r = select_related(s1, square_b());
  RelatedEdgeSet p = process_related(r);
  CHECK(p.r1.size() == r.r1.size());  // no arcs at all

  // A single arc wrapping both horizontal extremes decomposes into 3 pieces.
  auto at = [](double deg) {
    const double rad = deg * 3.14159265358979323846 / 180.0;
    return Point{std::cos(rad), std::sin(rad)};
  };
  RelatedEdgeSet one;
  one.r1.push_back(Edge::arc(at(95), at(265), at(435)));
  one.origin1.push_back(0);
  RelatedEdgeSet pp = process_related(one);
  CHECK(pp.r1.size() == 3);
}

TEST_CASE("property: processed count within [l, 3l] and ring-order preserved") {
  oracles::TestRng rng(31415);
  for (int trial = 0; trial < 500; ++trial) {
    RelatedEdgeSet r;
    const int l = 1 + static_cast<int>(rng.uniform() * 12);
    for (int i = 0; i < l; ++i) {
      if (rng.uniform() < 0.5) {
        r.r1.push_back(oracles::random_arc(rng, 0.5, 10.0));
      } else {
        r.r1.push_back(Edge::segment({rng.uniform(-10, 10), rng.uniform(-10, 10)},
                                     {rng.uniform(20, 30), rng.uniform(-10, 10)}));
      }
      r.origin1.push_back(i);
    }
    RelatedEdgeSet p = process_related(r);
    CHECK(p.r1.size() >= r.r1.size());
    CHECK(p.r1.size() <= 3 * r.r1.size());
    CHECK(std::is_sorted(p.origin1.begin(), p.origin1.end()));
  }
}
