#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arcbool/arc_polygon.hpp"

namespace arcbool {

// In-memory form of the polygon file format (see README for the grammar).
struct PolygonFile {
  std::vector<std::vector<PointRec>> polygons;
  std::optional<Tolerances> tol_override;
};

PolygonFile read_polygon_file(std::istream& in, const std::string& source_name = "<stream>");
PolygonFile read_polygon_file_path(const std::string& path);

void write_polygon_file(std::ostream& out, const std::vector<std::vector<PointRec>>& polygons,
                        const Tolerances* tol = nullptr);
void write_polygon_file_path(const std::string& path,
                             const std::vector<std::vector<PointRec>>& polygons,
                             const Tolerances* tol = nullptr);

std::vector<PointRec> circuit_to_points(const Circuit& c);

// Exact shortest decimal round-trip formatting.
std::string format_double(double v);

}  // namespace arcbool
