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

const double kRoot2 = std::sqrt(2.0);

std::string kinds_of(const Ring& r) {
  std::string out;
  for (Node* n : r.nodes())
    out += n->crossing ? 'x' : (n->tag == NodeTag::Appendix ? 'a' : 'v');
  return out;
}

NewRings run_relink(const ArcPolygon& a, const ArcPolygon& b, RelinkStats* stats = nullptr) {
  SequenceLists seqs = construct_sequence_lists(a, b);
  return construct_new_linked_lists(a, b, seqs.s1, seqs.s2, seqs.related, {}, stats);
}

}  // namespace

TEST_CASE("insert_appendix_points reuses the old appendix when possible") {
  Edge semi = Edge::arc({1, 0}, {0, 1}, {-1, 0});

  // One intersection away from the appendix: one fresh appendix, the old
  // one kept for its sub-arc.
  int fresh = -1;
  auto chain = insert_appendix_points(semi, {{-0.5, std::sqrt(3.0) / 2}}, {}, &fresh);
  CHECK(fresh == 1);
  REQUIRE(chain.size() == 5);
  CHECK(chain[1].tag == NodeTag::Appendix);
  CHECK(dist(chain[1].pt, {0, 1}) < 1e-12);  // reused original
  CHECK(chain[2].crossing);
  CHECK(chain[3].tag == NodeTag::Appendix);

  // Intersection exactly at the old appendix: both sub-arcs get fresh ones.
  chain = insert_appendix_points(semi, {{0, 1}}, {}, &fresh);
  CHECK(fresh == 2);
  REQUIRE(chain.size() == 5);
  CHECK(dist(chain[1].pt, {kRoot2 / 2, kRoot2 / 2}) < 1e-9);
  CHECK(dist(chain[3].pt, {-kRoot2 / 2, kRoot2 / 2}) < 1e-9);
}

TEST_CASE("merge_run discards intersection-free runs and heals split points") {
  // Non-x-monotone arc wrapping the right extreme, decomposed into two.
  Edge arc = Edge::arc({std::cos(-0.9), std::sin(-0.9)}, {1, 0},
                       {std::cos(0.9), std::sin(0.9)});
  SeqList list = initialize_sequence_list({arc}, {7});
  REQUIRE(list.items.size() == 2);
  CHECK(list.items[0].tri == 1);

  std::vector<SeqItem> run{list.items[0], list.items[1]};
  CHECK(!merge_run(run, arc).has_value());  // no intersections: discard

  // An intersection on the second piece: merged chain split only there.
  const Point q = list.items[1].edge.point_at(0.6);
  run[1].xsecs.push_back(q);
  run[1].params.push_back(list.items[1].edge.param_of(q));
  auto merged = merge_run(run, arc);
  REQUIRE(merged.has_value());
  REQUIRE(merged->size() == 5);  // start, appendix, crossing, appendix, end
  CHECK((*merged)[2].crossing);
  CHECK(dist((*merged)[2].pt, q) < 1e-12);
  // The decomposition cut at (1, 0) is healed away: no boundary node there.
  // (The original appendix sits at (1, 0) and is rightly reused.)
  for (const NodeSpec& spec : *merged)
    if (spec.tag != NodeTag::Appendix) CHECK(dist(spec.pt, {1, 0}) > 1e-6);
  CHECK(dist((*merged)[1].pt, {1, 0}) < 1e-12);

  // Pieces from an unrelated circle are rejected.
  std::vector<SeqItem> bogus = run;
  bogus[0].edge = Edge::arc({10, 0}, {11, 1}, {12, 0});
  CHECK_THROWS_AS((void)merge_run(bogus, arc), Error);
}

TEST_CASE("no intersections leave the rings structurally identical to the inputs") {
  ArcPolygon p1 = ArcPolygon::from_point_list({v(0, 0), v(4, 0), v(0, 4)});
  ArcPolygon p2 = ArcPolygon::from_point_list({v(4, 1), v(4, 4), v(1, 4)});
  NewRings rings = run_relink(p1, p2);
  CHECK(rings.crossings == 0);
  auto same = [](const Ring& a, const Ring& b) {
    auto na = a.nodes(), nb = b.nodes();
    REQUIRE(na.size() == nb.size());
    for (std::size_t i = 0; i < na.size(); ++i) {
      CHECK(na[i]->tag == nb[i]->tag);
      CHECK(dist(na[i]->pt, nb[i]->pt) == 0.0);
    }
  };
  same(rings.p1, p1.ring());
  same(rings.p2, p2.ring());
}

TEST_CASE("offset squares gain two crossing nodes per ring and no appendixes") {
  NewRings rings = run_relink(square_a(), square_b());
  CHECK(rings.crossings == 2);
  CHECK(kinds_of(rings.p1) == "vvxvxv");
  CHECK(kinds_of(rings.p2) == "vxvvvx");
  for (Node* n : rings.p1.nodes()) {
    if (n->crossing) {
      REQUIRE(n->twin != nullptr);
      CHECK(n->twin->twin == n);
      CHECK(dist(n->twin->pt, n->pt) == 0.0);
    }
  }
}

TEST_CASE("worked example: both rings come out in the documented arrangement") {
  RelinkStats stats;
  NewRings rings = run_relink(worked_p1(), worked_p2(), &stats);
  CHECK(rings.crossings == 4);
  // First ring: two crossings on the first edge, the arc split once with
  // the original appendix retained after the crossing, one crossing on the
  // closing edge.
  CHECK(kinds_of(rings.p1) == "vxxvvaxavx");
  CHECK(kinds_of(rings.p2) == "vvxxvavxx");

  // The retained appendix is the original one.
  auto nodes = rings.p1.nodes();
  CHECK(dist(nodes[7]->pt, {4, 6}) == 0.0);

  // One arc got one intersection and needed one fresh appendix.
  REQUIRE(stats.appendix_counts.size() == 1);
  CHECK(stats.appendix_counts[0] == std::pair<int, int>{1, 1});
}

TEST_CASE("property: rebuilt rings trace the input curve and respect node bounds") {
  oracles::TestRng rng(991);
  unsigned long long seed = 900;
  int accepted = 0;
  while (accepted < 150) {
    const int n = 4 + static_cast<int>(rng.uniform() * 12);
    ArcPolygon a = generate_polygon(n, seed++, rng.uniform());
    ArcPolygon b = generate_polygon(n, seed++, rng.uniform());
    RelinkStats stats;
    NewRings rings;
    try {
      rings = run_relink(a, b, &stats);
    } catch (const Error&) {
      continue;
    }
    ++accepted;

    // Appendix insertion bound per arc: fresh count in {k, k+1}.
    for (auto [k, fresh] : stats.appendix_counts) {
      CHECK(fresh >= k);
      CHECK(fresh <= k + 1);
    }
    // Decomposed-arc runs have length 2 or 3.
    for (int len : stats.run_lengths) {
      CHECK(len >= 2);
      CHECK(len <= 3);
    }
    // Node budget of the rebuilt rings.
    CHECK(rings.p1.size() <= 3 * static_cast<std::size_t>(a.n_edges()) +
                                 2 * static_cast<std::size_t>(rings.crossings) + 1);
    CHECK(rings.p2.size() <= 3 * static_cast<std::size_t>(b.n_edges()) +
                                 2 * static_cast<std::size_t>(rings.crossings) + 1);

    // Crossing nodes match one-to-one across the rings.
    int k1 = 0, k2 = 0;
    for (Node* node : rings.p1.nodes())
      if (node->crossing) {
        ++k1;
        REQUIRE(node->twin);
        CHECK(node->twin->twin == node);
      }
    for (Node* node : rings.p2.nodes())
      if (node->crossing) ++k2;
    CHECK(k1 == rings.crossings);
    CHECK(k2 == rings.crossings);

    // The rebuilt boundary equals the input boundary as a curve: samples of
    // each lie on the edges of the other.
    const auto rebuilt_edges = ring_edges(rings.p1);
    for (const Point& p : oracles::sample_boundary(a.ring(), 64))
      CHECK(oracles::dist_to_edges(p, rebuilt_edges) < 1e-9);
    const auto original_edges = a.edges();
    for (const Point& p : oracles::sample_boundary(rings.p1, 64))
      CHECK(oracles::dist_to_edges(p, original_edges) < 1e-9);
    // Appendix nodes stay concyclic with their bounding nodes.
    for (const Edge& e : ring_edges(rings.p1)) {
      if (!e.is_arc()) continue;
      CHECK(std::fabs(dist(e.appendix(), e.center()) - e.radius()) <
            1e-9 * std::max(1.0, e.radius()));
    }
  }
}

TEST_CASE("property: merged rings equal the decomposition-free reconstruction") {
  // The naive variant splits original arcs directly; after merging, the
  // labeled pipeline must produce point-identical rings.
  oracles::TestRng rng(3434);
  unsigned long long seed = 5000;
  int accepted = 0;
  while (accepted < 100) {
    ArcPolygon a = generate_polygon(8, seed++, 1.0);
    ArcPolygon b = generate_polygon(8, seed++, 1.0);
    BoolResult via_sweep, via_naive;
    try {
      via_sweep = boolean_op(a, b, BoolOp::Intersection, Method::Re2l);
      via_naive = boolean_op(a, b, BoolOp::Intersection, Method::Naive);
    } catch (const Error&) {
      continue;
    }
    ++accepted;
    CHECK(canonical_equal(via_sweep, via_naive, 1e-9));
  }
}
