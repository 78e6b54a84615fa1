#include "arcbool/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace arcbool {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// mt19937_64 with an explicit 53-bit mapping, so the byte stream is
// identical across platforms and standard libraries.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int pick(int n) { return static_cast<int>(gen() % static_cast<unsigned long long>(n)); }
};

}  // namespace

std::vector<PointRec> generate_points(int n, unsigned long long seed, double arc_fraction,
                                      const Tolerances& tol) {
  if (n < 3) fail(Errc::GenerationFailed, "need at least 3 edges");
  if (arc_fraction < 0.0 || arc_fraction > 1.0)
    fail(Errc::GenerationFailed, "arc fraction must lie in [0, 1]");
  Rng rng(seed);
  const Point center{50.0, 50.0};
  const double radius = 42.0;

  // Star skeleton: angularly sorted, radially jittered vertices.
  std::vector<Point> verts(n);
  for (int i = 0; i < n; ++i) {
    const double ang = kTau * (i + 0.1 + 0.8 * rng.uniform()) / n;
    const double r = radius * (0.35 + 0.55 * rng.uniform());
    verts[i] = {center.x + r * std::cos(ang), center.y + r * std::sin(ang)};
  }
  // Choose which edges become arcs.
  const int arcs = static_cast<int>(std::lround(arc_fraction * n));
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(idx[i], idx[rng.pick(i + 1)]);
  std::vector<bool> is_arc(n, false);
  for (int i = 0; i < arcs; ++i) is_arc[idx[i]] = true;
  std::vector<double> bulge(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (is_arc[i]) bulge[i] = rng.uniform(0.25, 0.8);
  }

  for (int attempt = 0; attempt < 32; ++attempt) {
    const double scale = std::pow(0.5, attempt);
    std::vector<PointRec> pts;
    for (int i = 0; i < n; ++i) {
      const Point a = verts[i];
      const Point b = verts[(i + 1) % n];
      pts.push_back({a, NodeTag::Vertex});
      if (!is_arc[i]) continue;
      const Point mid = 0.5 * (a + b);
      const Point chord = b - a;
      // Outward normal of a CCW boundary points right of the edge direction.
      Point out{chord.y, -chord.x};
      const double len = norm(out);
      out = (1.0 / len) * out;
      const double h = bulge[i] * scale * 0.5 * norm(chord);
      if (h < 16.0 * tol.eps_pt) continue;  // bulge shrunk away: keep a segment
      pts.push_back({mid + h * out, NodeTag::Appendix});
    }
    try {
      (void)ArcPolygon::from_point_list(pts, tol);
      return pts;
    } catch (const Error&) {
      // Shrink the bulges and retry.
    }
  }
  fail(Errc::GenerationFailed, "could not produce a simple polygon within 32 attempts");
}

ArcPolygon generate_polygon(int n, unsigned long long seed, double arc_fraction,
                            const Tolerances& tol) {
  return ArcPolygon::from_point_list(generate_points(n, seed, arc_fraction, tol), tol);
}

}  // namespace arcbool
