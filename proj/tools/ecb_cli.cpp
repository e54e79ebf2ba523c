// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb_cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ecb/ecb.hpp"

namespace ecb::cli {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double grid_point(const SpaceSpec& s, int k, int grid) {
  return s.alpha + (s.beta - s.alpha) * k / (grid - 1);
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw EcbError(ErrorKind::Schema, "cannot write '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit(const json& j, const RunConfig& c, std::ostream& out) {
  Sink sink(c.output, out);
  sink.stream() << j.dump(2) << "\n";
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1)
    throw EcbError(ErrorKind::Schema, c.command + " expects exactly one input file");
  return c.inputs[0];
}

// A space document, or a curve document whose space is used.
SpaceSpec space_input(const RunConfig& c) {
  const json j = parse_json_file(single_input(c));
  return space_from_json(j.is_object() && j.contains("space") ? j["space"] : j);
}

void check_config(const RunConfig& c) {
  if (c.grid < 2) throw EcbError(ErrorKind::Schema, "grid density must be at least 2");
  if (!(c.middle_tolerance > 0.0))
    throw EcbError(ErrorKind::Schema, "tolerances must be positive");
  if (c.max_order < 1) throw EcbError(ErrorKind::Schema, "--max-order must be positive");
}

json cmd_transform(const RunConfig& c) {
  const SpaceSpec space = space_input(c);
  TransformOptions opts;
  opts.source = table_source_from_string(c.source);
  opts.middle_tolerance = c.middle_tolerance;
  const TransformMatrix T = build_transform(space, opts);
  json j = to_json(T);
  if (space.n % 2 == 0) j["middle_discrepancy"] = T.middle_discrepancy;
  if (c.flops) {
    j["flops"] = {{"measured", T.flops},
                  {"kappa", kappa(space.n)},
                  {"mul", T.tally.mul},
                  {"div", T.tally.div},
                  {"add", T.tally.add}};
  }
  if (c.oracle) {
    const TransformMatrix O = collocation_oracle(space);
    const Matrix diff = (T.t - O.t).cwiseAbs();
    double rel = 0.0;
    for (Eigen::Index i = 0; i < diff.rows(); ++i)
      for (Eigen::Index k = 0; k < diff.cols(); ++k)
        rel = std::max(rel, diff(i, k) / std::max(1.0, std::abs(O.t(i, k))));
    j["oracle"] = {{"max_abs_diff", diff.maxCoeff()}, {"max_rel_diff", rel}};
  }
  return j;
}

json cmd_tables(const RunConfig& c) {
  const SpaceSpec space = space_input(c);
  return to_json(build_endpoint_tables(space, table_source_from_string(c.source)));
}

void write_curve_samples(const RunConfig& c, const IntegralCurveSpec& spec,
                         const ControlPolygon& poly) {
  if (c.samples_path.empty()) return;
  Sink sink(c.samples_path, std::cout);
  std::ostream& os = sink.stream();
  const BBasis basis = make_bbasis(spec.space);
  const Eigen::Index d = spec.lambdas.cols();
  os << "u";
  for (Eigen::Index l = 0; l < d; ++l) os << ",c" << l + 1;
  for (Eigen::Index l = 0; l < d; ++l) os << ",b" << l + 1;
  os << "\n";
  for (int k = 0; k < c.grid; ++k) {
    const double u = grid_point(spec.space, k, c.grid);
    const Vector x = eval_integral_curve(spec, u), y = eval_bcurve(poly, basis, u);
    os << fmt(u);
    for (Eigen::Index l = 0; l < d; ++l) os << "," << fmt(x[l]);
    for (Eigen::Index l = 0; l < d; ++l) os << "," << fmt(y[l]);
    os << "\n";
  }
}

json cmd_convert_curve(const RunConfig& c) {
  const IntegralCurveSpec spec = curve_from_json(parse_json_file(single_input(c)));
  const ControlPolygon poly = convert_curve(spec, build_transform(spec.space));
  write_curve_samples(c, spec, poly);
  return to_json(poly);
}

json cmd_convert_surface(const RunConfig& c) {
  const SurfaceSpec spec = surface_from_json(parse_json_file(single_input(c)));
  const ControlNet net =
      convert_surface(spec, build_transform(spec.spaces[0]), build_transform(spec.spaces[1]));
  if (!c.samples_path.empty()) {
    Sink sink(c.samples_path, std::cout);
    std::ostream& os = sink.stream();
    const BBasis bu = make_bbasis(spec.spaces[0]), bv = make_bbasis(spec.spaces[1]);
    const std::size_t d = spec.coordinates.size();
    os << "u,v";
    for (std::size_t l = 0; l < d; ++l) os << ",s" << l + 1;
    for (std::size_t l = 0; l < d; ++l) os << ",b" << l + 1;
    os << "\n";
    const int g = std::max(2, static_cast<int>(std::lround(std::sqrt(double(c.grid)))));
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        const double u = grid_point(spec.spaces[0], a, g), v = grid_point(spec.spaces[1], b, g);
        const Vector x = eval_integral_surface(spec, u, v), y = eval_bsurface(net, bu, bv, u, v);
        os << fmt(u) << "," << fmt(v);
        for (std::size_t l = 0; l < d; ++l) os << "," << fmt(x[l]);
        for (std::size_t l = 0; l < d; ++l) os << "," << fmt(y[l]);
        os << "\n";
      }
  }
  return to_json(net);
}

json cmd_rationalize(const RunConfig& c, int& status) {
  const json in = parse_json_file(single_input(c));
  if (in.contains("spaces")) {
    const SurfaceSpec spec = surface_from_json(in);
    const RationalNet net =
        rationalize_surface(spec, build_transform(spec.spaces[0]), build_transform(spec.spaces[1]));
    if (!net.all_nonneg) {
      status = 3;
      json j = error_json(EcbError(ErrorKind::NegativeWeights,
                                   "rational surface has negative weights"));
      j["result"] = to_json(net);
      return j;
    }
    return to_json(net);
  }
  const IntegralCurveSpec spec = curve_from_json(in);
  ElevatedRational r;
  if (c.auto_elevate) {
    r = rationalize_with_elevation(spec, c.max_order);
  } else {
    r.spec = spec;
    r.rep = rationalize_curve(spec, build_transform(spec.space));
    r.success = r.rep.all_nonneg;
  }
  json result = to_json(r.rep);
  result["elevations"] = r.elevations;
  if (!r.success) {
    status = 3;
    const std::string msg = c.auto_elevate
        ? "no nonnegative weights up to order " + std::to_string(c.max_order)
        : "negative weights; rerun with --auto-elevate";
    json j = error_json(EcbError(ErrorKind::NegativeWeights, msg));
    j["result"] = result;
    return j;
  }
  return result;
}

json cmd_critical_length(const RunConfig& c) {
  const SpaceSpec space = space_input(c);
  json j;
  j["space"] = to_json(space);
  const json r = to_json(critical_length(space));
  for (const auto& [k, v] : r.items()) j[k] = v;
  return j;
}

void cmd_cost(const RunConfig& c, std::ostream& out) {
  if (c.n_max < 1 || c.delta < 1)
    throw EcbError(ErrorKind::Schema, "--n-max and --delta must be positive");
  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  os << "n,kappa,kappa_lu,kappa_below_lu\n";
  for (int n = 1; n <= c.n_max; ++n) {
    const auto k = kappa(n), l = kappa_lu(n, c.delta);
    os << n << "," << k << "," << l << "," << (k < l ? 1 : 0) << "\n";
  }
}

void cmd_sample(const RunConfig& c, std::ostream& out) {
  const IntegralCurveSpec spec = curve_from_json(parse_json_file(single_input(c)));
  const BBasis basis = make_bbasis(spec.space);
  const TransformMatrix T = build_transform(spec.space);
  Matrix points;
  Sink sink(c.output, out);
  std::ostream& os = sink.stream();
  if (c.rational) {
    const RationalBRep rep = rationalize_curve(spec, T);
    points = rep.points;
    const Eigen::Index d = points.cols();
    os << "u";
    for (Eigen::Index l = 0; l < d; ++l) os << ",x" << l + 1;
    os << "\n";
    for (int k = 0; k < c.grid; ++k) {
      const double u = grid_point(spec.space, k, c.grid);
      const Vector x = eval_rational(rep, basis, u);
      os << fmt(u);
      for (Eigen::Index l = 0; l < d; ++l) os << "," << fmt(x[l]);
      os << "\n";
    }
  } else {
    const ControlPolygon poly = convert_curve(spec, T);
    points = poly.points;
    const Eigen::Index d = points.cols();
    os << "u";
    for (Eigen::Index l = 0; l < d; ++l) os << ",x" << l + 1;
    os << "\n";
    for (int k = 0; k < c.grid; ++k) {
      const double u = grid_point(spec.space, k, c.grid);
      const Vector x = eval_bcurve(poly, basis, u);
      os << fmt(u);
      for (Eigen::Index l = 0; l < d; ++l) os << "," << fmt(x[l]);
      os << "\n";
    }
  }
  if (!c.polygon_path.empty()) {
    Sink ps(c.polygon_path, out);
    std::ostream& p = ps.stream();
    p << "j";
    for (Eigen::Index l = 0; l < points.cols(); ++l) p << ",p" << l + 1;
    p << "\n";
    for (Eigen::Index j = 0; j < points.rows(); ++j) {
      p << j;
      for (Eigen::Index l = 0; l < points.cols(); ++l) p << "," << fmt(points(j, l));
      p << "\n";
    }
  }
}

}  // namespace

int default_grid() {
  if (const char* env = std::getenv("ECB_GRID")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 10'000'000) return static_cast<int>(v);
  }
  return 201;
}

int run(const RunConfig& c, std::ostream& out) {
  try {
    check_config(c);
    const std::string& cmd = c.command;
    int status = 0;
    if (cmd == "transform") emit(cmd_transform(c), c, out);
    else if (cmd == "tables") emit(cmd_tables(c), c, out);
    else if (cmd == "convert-curve") emit(cmd_convert_curve(c), c, out);
    else if (cmd == "convert-surface") emit(cmd_convert_surface(c), c, out);
    else if (cmd == "rationalize") emit(cmd_rationalize(c, status), c, out);
    else if (cmd == "critical-length") emit(cmd_critical_length(c), c, out);
    else if (cmd == "cost") cmd_cost(c, out);
    else if (cmd == "sample") cmd_sample(c, out);
    else throw EcbError(ErrorKind::Schema, "unknown command '" + cmd + "'");
    return status;
  } catch (const EcbError& e) {
    out << error_json(e).dump(2) << "\n";
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized B-bases of extended Chebyshev spaces", "ecb"};
  app.require_subcommand(1);
  RunConfig c;
  c.grid = default_grid();

  auto common = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", c.inputs, what)->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", c.output, "Write the result here instead of stdout");
    sub->add_option("--grid", c.grid, "Sample grid density (default 201 or $ECB_GRID)");
    return sub;
  };
  auto source = [&](CLI::App* sub) {
    sub->add_option("--source", c.source, "Endpoint derivative source")
        ->check(CLI::IsMember({"Auto", "ClosedForm", "Mixed", "Determinant"}));
  };

  auto* transform = common(app.add_subcommand("transform", "Transformation matrix"), "Space JSON");
  transform->add_flag("--flops", c.flops, "Report flop counts");
  transform->add_flag("--oracle", c.oracle, "Compare against collocation");
  transform->add_option("--middle-tol", c.middle_tolerance, "Middle-column tolerance");
  source(transform);
  auto* tables = common(app.add_subcommand("tables", "Endpoint derivative tables"), "Space JSON");
  source(tables);
  auto* cc = common(app.add_subcommand("convert-curve", "Control polygon of a curve"), "Curve JSON");
  cc->add_option("--samples", c.samples_path, "Write sample CSV");
  auto* cs = common(app.add_subcommand("convert-surface", "Control net of a surface"), "Surface JSON");
  cs->add_option("--samples", c.samples_path, "Write sample CSV");
  auto* rat = common(app.add_subcommand("rationalize", "Rational control points and weights"),
                     "Pre-image JSON");
  rat->add_flag("--auto-elevate", c.auto_elevate, "Elevate until weights are nonnegative");
  rat->add_option("--max-order", c.max_order, "Highest order tried by --auto-elevate");
  common(app.add_subcommand("critical-length", "Critical length estimate"), "Space JSON");
  auto* cost = app.add_subcommand("cost", "Flop cost table (CSV)");
  cost->add_option("--n-max", c.n_max, "Largest n")->required();
  cost->add_option("--delta", c.delta, "Coordinate count for the LU cost")->required();
  cost->add_option("-o,--output", c.output, "Write the result here instead of stdout");
  auto* sample = common(app.add_subcommand("sample", "Sample a curve (CSV)"), "Curve JSON");
  sample->add_flag("--rational", c.rational, "Treat the last coordinate as denominator");
  sample->add_option("--polygon", c.polygon_path, "Write control polygon CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 2;
  }
  for (CLI::App* sub : app.get_subcommands()) c.command = sub->get_name();
  return run(c, out);
}

}  // namespace ecb::cli
