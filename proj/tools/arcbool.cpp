#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arcbool/bench.hpp"
#include "arcbool/boolean.hpp"
#include "arcbool/generator.hpp"
#include "arcbool/io.hpp"
#include "arcbool/svg.hpp"

namespace {

using namespace arcbool;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::InvalidEdge:
    case Errc::NotSimple:
    case Errc::NotCCW:
    case Errc::BadAppendix:
    case Errc::TooFewVertices:
      return 1;
    case Errc::OverlapUnsupported:
    case Errc::DegenerateConfiguration:
    case Errc::OddCrossingCount:
    case Errc::UnionHoleUnsupported:
    case Errc::DifferenceHoleUnsupported:
    case Errc::DisjointInputs:
    case Errc::GenerationFailed:
      return 2;
    default:
      return 3;
  }
}

// Tolerance resolution order: defaults, file override, ARCBOOL_EPS, --eps.
Tolerances resolve_tol(const PolygonFile& file, double eps_flag) {
  Tolerances tol;
  if (file.tol_override) tol = *file.tol_override;
  if (const char* env = std::getenv("ARCBOOL_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) tol.eps_pt = v;
  }
  if (eps_flag > 0.0) tol.eps_pt = eps_flag;
  return tol;
}

ArcPolygon load_polygon(const std::vector<PointRec>& pts, const Tolerances& tol,
                        bool normalize) {
  if (!normalize) return ArcPolygon::from_point_list(pts, tol);
  try {
    return ArcPolygon::from_point_list(pts, tol);
  } catch (const Error& e) {
    if (e.code() != Errc::NotCCW) throw;
  }
  std::vector<PointRec> rev;
  rev.push_back(pts.front());
  for (std::size_t i = pts.size(); i-- > 1;) rev.push_back(pts[i]);
  return ArcPolygon::from_point_list(rev, tol);
}

int cmd_op(const std::string& operation, const std::string& a_path, const std::string& b_path,
           const std::string& out_path, double eps_flag, bool normalize) {
  BoolOp op;
  if (operation == "intersect") op = BoolOp::Intersection;
  else if (operation == "union") op = BoolOp::Union;
  else if (operation == "difference") op = BoolOp::Difference;
  else {
    std::cerr << "unknown operation '" << operation << "'\n";
    return 1;
  }
  const PolygonFile fa = read_polygon_file_path(a_path);
  const PolygonFile fb = read_polygon_file_path(b_path);
  if (fa.polygons.size() != 1 || fb.polygons.size() != 1)
    fail(Errc::ParseError, "operand files must hold exactly one polygon each");
  const Tolerances tol = resolve_tol(fa, eps_flag);
  const ArcPolygon p1 = load_polygon(fa.polygons[0], tol, normalize);
  const ArcPolygon p2 = load_polygon(fb.polygons[0], tol, normalize);

  const BoolResult result = boolean_op(p1, p2, op, Method::Re2l, tol);
  std::vector<std::vector<PointRec>> out;
  for (const Circuit& c : result.circuits) out.push_back(circuit_to_points(c));
  write_polygon_file_path(out_path, out);
  std::cout << bool_op_name(op) << ": " << result.circuits.size() << " circuit(s), area "
            << format_double(total_area(result, tol)) << "\n";
  return 0;
}

int cmd_gen(int n, unsigned long long seed, double arcs, const std::string& out_path) {
  const std::vector<PointRec> pts = generate_points(n, seed, arcs);
  write_polygon_file_path(out_path, {pts});
  return 0;
}

int cmd_render(const std::vector<std::string>& files, const std::string& out_path,
               double eps_flag) {
  std::vector<std::vector<PointRec>> polys;
  Tolerances tol;
  for (const std::string& path : files) {
    const PolygonFile f = read_polygon_file_path(path);
    tol = resolve_tol(f, eps_flag);
    for (const auto& p : f.polygons) polys.push_back(p);
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::ParseError, out_path + ": cannot open file for writing");
  out << render_svg(polys, tol);
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, int trials, const std::vector<std::string>& methods,
              unsigned long long seed, const std::string& out_path, const std::string& op_name,
              double arcs) {
  BenchConfig cfg;
  if (!sizes.empty()) cfg.sizes = sizes;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.arc_fraction = arcs;
  if (!methods.empty()) {
    cfg.methods.clear();
    for (const std::string& m : methods) {
      if (m == "re2l") cfg.methods.push_back(Method::Re2l);
      else if (m == "naive") cfg.methods.push_back(Method::Naive);
      else if (m == "standard") cfg.methods.push_back(Method::Standard);
      else {
        std::cerr << "unknown method '" << m << "'\n";
        return 1;
      }
    }
  }
  if (op_name == "intersect") cfg.op = BoolOp::Intersection;
  else if (op_name == "union") cfg.op = BoolOp::Union;
  else if (op_name == "difference") cfg.op = BoolOp::Difference;
  else {
    std::cerr << "unknown operation '" << op_name << "'\n";
    return 1;
  }
  const BenchReport report = run_bench(cfg);
  if (out_path.empty()) {
    write_bench_report(std::cout, report);
  } else {
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, out_path + ": cannot open file for writing");
    write_bench_report(out, report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean operations on circular-arc polygons"};
  app.require_subcommand(1);

  std::string operation, a_path, b_path, out_path;
  double eps_flag = 0.0;
  bool normalize = false;
  CLI::App* op = app.add_subcommand("op", "compute a boolean operation on two polygon files");
  op->add_option("operation", operation, "intersect | union | difference")->required();
  op->add_option("--a", a_path, "first operand file")->required();
  op->add_option("--b", b_path, "second operand file")->required();
  op->add_option("--out", out_path, "result file")->required();
  op->add_option("--eps", eps_flag, "point-coincidence tolerance override");
  op->add_flag("--normalize", normalize, "reverse clockwise input polygons");

  int gen_n = 0;
  unsigned long long gen_seed = 1;
  double gen_arcs = 0.5;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random circular-arc polygon");
  gen->add_option("--n", gen_n, "edge count")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--arcs", gen_arcs, "fraction of arc edges in [0, 1]");
  gen->add_option("--out", gen_out, "output file")->required();

  std::vector<std::string> render_files;
  std::string render_out;
  double render_eps = 0.0;
  CLI::App* render = app.add_subcommand("render", "render polygon files as SVG");
  render->add_option("files", render_files, "polygon files")->required();
  render->add_option("--out", render_out, "SVG output file")->required();
  render->add_option("--eps", render_eps, "point-coincidence tolerance override");

  std::vector<int> bench_sizes;
  int bench_trials = 100;
  std::vector<std::string> bench_methods;
  unsigned long long bench_seed = 1;
  std::string bench_out, bench_op = "intersect";
  double bench_arcs = 0.5;
  CLI::App* bench = app.add_subcommand("bench", "compare methods on random polygon pairs");
  bench->add_option("--sizes", bench_sizes, "edge counts")->delimiter(',');
  bench->add_option("--trials", bench_trials, "trials per size");
  bench->add_option("--methods", bench_methods, "subset of re2l,naive,standard")->delimiter(',');
  bench->add_option("--seed", bench_seed, "seed for the trial stream");
  bench->add_option("--out", bench_out, "report file (stdout when omitted)");
  bench->add_option("--op", bench_op, "operation to time");
  bench->add_option("--arcs", bench_arcs, "fraction of arc edges");

  CLI11_PARSE(app, argc, argv);

  try {
    if (op->parsed()) return cmd_op(operation, a_path, b_path, out_path, eps_flag, normalize);
    if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_arcs, gen_out);
    if (render->parsed()) return cmd_render(render_files, render_out, render_eps);
    if (bench->parsed())
      return cmd_bench(bench_sizes, bench_trials, bench_methods, bench_seed, bench_out,
                       bench_op, bench_arcs);
  } catch (const arcbool::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
