#include "arcbool/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace arcbool {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

struct Parser {
  std::istream& in;
  std::string source;
  int line_no = 0;
  std::string line;

  [[noreturn]] void error(const std::string& msg, int col = 1) {
    std::ostringstream os;
    os << source << ":" << line_no << ":" << col << ": " << msg;
    fail(Errc::ParseError, os.str());
  }

  // Next significant line (comments and blanks skipped); false on EOF.
  bool next() {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      return true;
    }
    return false;
  }

  std::vector<std::string> tokens() const {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
  }

  double number(const std::string& tok) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
      error("expected a number, got '" + tok + "'",
            static_cast<int>(line.find(tok)) + 1);
    return v;
  }
};

}  // namespace

PolygonFile read_polygon_file(std::istream& in, const std::string& source_name) {
  Parser p{in, source_name, 0, {}};
  if (!p.next()) p.error("empty file: missing 'arcbool <version>' header");
  {
    const auto toks = p.tokens();
    if (toks.size() != 2 || toks[0] != "arcbool" || toks[1] != "1")
      p.error("expected header 'arcbool 1'");
  }
  PolygonFile file;
  Tolerances tol;
  bool has_tol = false;
  while (p.next()) {
    const auto toks = p.tokens();
    if (toks[0] == "eps_pt" || toks[0] == "eps_rel" || toks[0] == "eps_param") {
      if (toks.size() != 2) p.error("expected '" + toks[0] + " <value>'");
      const double v = p.number(toks[1]);
      if (!(v > 0.0)) p.error("tolerance must be positive");
      if (toks[0] == "eps_pt") tol.eps_pt = v;
      else if (toks[0] == "eps_rel") tol.eps_rel = v;
      else tol.eps_param = v;
      has_tol = true;
      continue;
    }
    if (toks[0] != "polygon") p.error("expected 'polygon <count>' or a tolerance line");
    if (toks.size() != 2) p.error("expected 'polygon <count>'");
    const long count = std::lround(p.number(toks[1]));
    if (count < 1) p.error("polygon needs at least one point record");
    std::vector<PointRec> pts;
    for (long i = 0; i < count; ++i) {
      if (!p.next()) p.error("unexpected end of file inside a polygon block");
      const auto rec = p.tokens();
      if (rec.size() != 3 || (rec[0] != "v" && rec[0] != "a"))
        p.error("expected 'v <x> <y>' or 'a <x> <y>'");
      pts.push_back({{p.number(rec[1]), p.number(rec[2])},
                     rec[0] == "v" ? NodeTag::Vertex : NodeTag::Appendix});
    }
    file.polygons.push_back(std::move(pts));
  }
  if (has_tol) file.tol_override = tol;
  return file;
}

PolygonFile read_polygon_file_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, path + ": cannot open file");
  return read_polygon_file(in, path);
}

void write_polygon_file(std::ostream& out, const std::vector<std::vector<PointRec>>& polygons,
                        const Tolerances* tol) {
  out << "arcbool 1\n";
  if (tol) {
    out << "eps_pt " << format_double(tol->eps_pt) << "\n";
    out << "eps_rel " << format_double(tol->eps_rel) << "\n";
    out << "eps_param " << format_double(tol->eps_param) << "\n";
  }
  for (const auto& poly : polygons) {
    out << "polygon " << poly.size() << "\n";
    for (const PointRec& rec : poly) {
      out << (rec.tag == NodeTag::Appendix ? "a " : "v ") << format_double(rec.pt.x) << " "
          << format_double(rec.pt.y) << "\n";
    }
  }
}

void write_polygon_file_path(const std::string& path,
                             const std::vector<std::vector<PointRec>>& polygons,
                             const Tolerances* tol) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, path + ": cannot open file for writing");
  write_polygon_file(out, polygons, tol);
}

std::vector<PointRec> circuit_to_points(const Circuit& c) {
  std::vector<PointRec> out;
  for (Node* n : c.ring.nodes()) out.push_back({n->pt, n->tag});
  return out;
}

}  // namespace arcbool
