#include "arcbool/svg.hpp"

#include <cmath>
#include <sstream>

#include "arcbool/io.hpp"

namespace arcbool {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Lenient edge extraction: no orientation or simplicity validation, so that
// result files (lenses, single circuits) render as-is.
std::vector<Edge> edges_from_points(const std::vector<PointRec>& pts, const Tolerances& tol) {
  std::vector<Edge> out;
  if (pts.size() < 2) return out;
  std::size_t first = 0;
  while (first < pts.size() && pts[first].tag == NodeTag::Appendix) ++first;
  if (first == pts.size()) fail(Errc::ParseError, "polygon consists of appendix points only");
  const std::size_t n = pts.size();
  std::size_t i = first;
  do {
    const PointRec& a = pts[i];
    std::size_t j = (i + 1) % n;
    if (pts[j].tag == NodeTag::Appendix) {
      const PointRec& mid = pts[j];
      j = (j + 1) % n;
      if (pts[j].tag == NodeTag::Appendix)
        fail(Errc::ParseError, "two consecutive appendix points");
      out.push_back(Edge::arc(a.pt, mid.pt, pts[j].pt, tol));
    } else {
      out.push_back(Edge::segment(a.pt, pts[j].pt, tol));
    }
    i = j;
  } while (i != first);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void path_for(const std::vector<Edge>& edges, std::ostringstream& os) {
  os << "M " << fmt(edges.front().start().x) << " " << fmt(edges.front().start().y);
  for (const Edge& e : edges) {
    if (e.is_arc()) {
      const int large = std::fabs(e.sweep()) > kPi ? 1 : 0;
      const int sweep_flag = e.sweep() > 0.0 ? 1 : 0;
      os << " A " << fmt(e.radius()) << " " << fmt(e.radius()) << " 0 " << large << " "
         << sweep_flag << " " << fmt(e.end().x) << " " << fmt(e.end().y);
    } else {
      os << " L " << fmt(e.end().x) << " " << fmt(e.end().y);
    }
  }
  os << " Z";
}

}  // namespace

std::string render_svg(const std::vector<std::vector<PointRec>>& polygons,
                       const Tolerances& tol) {
  std::vector<std::vector<Edge>> edge_sets;
  for (const auto& poly : polygons) edge_sets.push_back(edges_from_points(poly, tol));

  bool any = false;
  Box view{0.0, 1.0, 0.0, 1.0};
  for (const auto& es : edge_sets) {
    for (const Edge& e : es) {
      if (!any) {
        view = edge_bbox(e);
        any = true;
      } else {
        view.expand(edge_bbox(e));
      }
    }
  }
  const double margin = 0.05 * std::max({view.width(), view.height(), 1e-6});
  const double x0 = view.xmin - margin;
  const double y0 = view.ymin - margin;
  const double w = view.width() + 2.0 * margin;
  const double h = view.height() + 2.0 * margin;
  const double stroke = 0.004 * std::max(w, h);
  const double marker = 2.0 * stroke;

  static const char* kStrokes[] = {"#1f6fb2", "#b2411f", "#2e8b57", "#7a3fb2"};
  static const char* kFills[] = {"#1f6fb220", "#b2411f20", "#2e8b5720", "#7a3fb220"};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
     << fmt(800.0 * h / w) << "\" viewBox=\"" << fmt(x0) << " " << fmt(y0) << " " << fmt(w)
     << " " << fmt(h) << "\">\n";
  // Flip to the usual y-up orientation; path data stays in model coordinates.
  os << "<g transform=\"translate(0," << fmt(view.ymin + view.ymax) << ") scale(1,-1)\">\n";

  for (std::size_t i = 0; i < edge_sets.size(); ++i) {
    if (edge_sets[i].empty()) continue;
    std::ostringstream d;
    path_for(edge_sets[i], d);
    os << "<path d=\"" << d.str() << "\" fill=\"" << kFills[i % 4] << "\" stroke=\""
       << kStrokes[i % 4] << "\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }

  // Vertex and appendix markers.
  for (std::size_t i = 0; i < polygons.size(); ++i) {
    for (const PointRec& rec : polygons[i]) {
      if (rec.tag == NodeTag::Appendix) {
        os << "<rect x=\"" << fmt(rec.pt.x - marker) << "\" y=\"" << fmt(rec.pt.y - marker)
           << "\" width=\"" << fmt(2.0 * marker) << "\" height=\"" << fmt(2.0 * marker)
           << "\" fill=\"none\" stroke=\"" << kStrokes[i % 4] << "\" stroke-width=\""
           << fmt(0.5 * stroke) << "\"/>\n";
      } else {
        os << "<circle cx=\"" << fmt(rec.pt.x) << "\" cy=\"" << fmt(rec.pt.y) << "\" r=\""
           << fmt(marker) << "\" fill=\"" << kStrokes[i % 4] << "\"/>\n";
      }
    }
  }

  // Crossing markers for a rendered pair, best effort.
  if (edge_sets.size() == 2 && !edge_sets[0].empty() && !edge_sets[1].empty()) {
    try {
      for (const Edge& a : edge_sets[0]) {
        for (const Edge& b : edge_sets[1]) {
          for (const Point& q : intersect_edges(a, b, tol)) {
            os << "<circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\""
               << fmt(1.5 * marker)
               << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" << fmt(0.5 * stroke)
               << "\"/>\n";
          }
        }
      }
    } catch (const Error&) {
      // Overlapping inputs render without crossing markers.
    }
  }

  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace arcbool
