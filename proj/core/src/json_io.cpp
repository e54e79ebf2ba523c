// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/json_io.hpp"

#include <cmath>
#include <fstream>

namespace ecb {

namespace {

[[noreturn]] void schema(const std::string& msg) {
  throw EcbError(ErrorKind::Schema, msg);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) schema(std::string("'") + what + "' must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string("'") + what + "' must be an integer");
  return j.get<int>();
}

Root root_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 3) schema("root arrays are [re, im, multiplicity]");
    return {number(j[0], "re"), number(j[1], "im"), integer(j[2], "multiplicity")};
  }
  Root r;
  r.re = number(field(j, "re"), "re");
  r.im = j.contains("im") ? number(j["im"], "im") : 0.0;
  r.multiplicity = j.contains("multiplicity") ? integer(j["multiplicity"], "multiplicity") : 1;
  return r;
}

}  // namespace

json to_json(const SpaceSpec& s) {
  json j;
  j["family"] = to_string(s.family);
  j["n"] = s.n;
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  json params = json::object();
  if (s.family == Family::ExponentialTrigonometric4) params["omega"] = s.omega;
  if (s.family == Family::OdeDefined) {
    params["roots"] = json::array();
    for (const Root& r : s.roots)
      params["roots"].push_back({{"re", r.re}, {"im", r.im}, {"multiplicity", r.multiplicity}});
  }
  j["params"] = params;
  return j;
}

SpaceSpec space_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) schema("'family' must be a string");
  SpaceSpec s;
  s.family = family_from_string(fam.get<std::string>());
  s.alpha = j.contains("alpha") ? number(j["alpha"], "alpha") : 0.0;
  s.beta = number(field(j, "beta"), "beta");
  const json params = j.contains("params") ? j["params"] : json::object();
  if (!params.is_object()) schema("'params' must be an object");
  if (s.family == Family::ExponentialTrigonometric4)
    s.omega = number(field(params, "omega"), "omega");
  if (s.family == Family::OdeDefined) {
    const json& roots = field(params, "roots");
    if (!roots.is_array()) schema("'roots' must be an array");
    CharacteristicSpec cs;
    for (const json& r : roots) cs.roots.push_back(root_from_json(r));
    SpaceSpec derived = basis_from_characteristic(cs, s.alpha, s.beta);
    if (j.contains("n") && integer(j["n"], "n") != derived.n)
      schema("'n' does not match the total root multiplicity");
    return derived;
  }
  s.n = integer(field(j, "n"), "n");
  validate(s);
  return s;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) schema("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = number(j[i][k], "matrix entry");
  }
  return m;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) schema("vector must be an array");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = number(j[i], "vector entry");
  return v;
}

json to_json(const IntegralCurveSpec& spec) {
  json j;
  j["space"] = to_json(spec.space);
  j["coefficients"] = to_json(spec.lambdas);
  return j;
}

IntegralCurveSpec curve_from_json(const json& j) {
  IntegralCurveSpec spec{space_from_json(field(j, "space")),
                         matrix_from_json(field(j, "coefficients"))};
  if (spec.lambdas.rows() != spec.space.n + 1)
    schema("'coefficients' must hold n + 1 rows");
  if (spec.lambdas.cols() < 1) schema("'coefficients' rows must be nonempty");
  return spec;
}

json to_json(const SurfaceSpec& spec) {
  json j;
  j["spaces"] = json::array({to_json(spec.spaces[0]), to_json(spec.spaces[1])});
  json coords = json::array();
  for (const auto& terms : spec.coordinates) {
    json c = json::array();
    for (const SeparableTerm& t : terms) c.push_back({{"u", to_json(t.u)}, {"v", to_json(t.v)}});
    coords.push_back(c);
  }
  j["coordinates"] = coords;
  return j;
}

SurfaceSpec surface_from_json(const json& j) {
  const json& spaces = field(j, "spaces");
  if (!spaces.is_array() || spaces.size() != 2) schema("'spaces' must hold two spaces");
  SurfaceSpec spec;
  spec.spaces = {space_from_json(spaces[0]), space_from_json(spaces[1])};
  const json& coords = field(j, "coordinates");
  if (!coords.is_array() || coords.empty()) schema("'coordinates' must be a nonempty array");
  for (const json& c : coords) {
    if (!c.is_array() || c.empty()) schema("each coordinate is a nonempty list of terms");
    std::vector<SeparableTerm> terms;
    for (const json& t : c) {
      SeparableTerm term{vector_from_json(field(t, "u")), vector_from_json(field(t, "v"))};
      if (term.u.size() != spec.spaces[0].n + 1 || term.v.size() != spec.spaces[1].n + 1)
        schema("term vectors must have n + 1 entries per direction");
      terms.push_back(term);
    }
    spec.coordinates.push_back(terms);
  }
  return spec;
}

json to_json(const EndpointTables& t) {
  json j;
  j["space"] = to_json(t.space);
  j["source"] = to_string(t.source);
  j["phi_alpha"] = to_json(t.phi_alpha);
  j["phi_beta"] = to_json(t.phi_beta);
  j["b_alpha"] = to_json(t.b_alpha);
  j["b_beta"] = to_json(t.b_beta);
  return j;
}

json to_json(const TransformMatrix& T) {
  json j;
  j["space"] = to_json(T.space);
  j["t"] = to_json(T.t);
  return j;
}

json to_json(const ControlPolygon& p) {
  json j;
  j["space"] = to_json(p.space);
  j["points"] = to_json(p.points);
  return j;
}

json to_json(const ControlNet& net) {
  json j;
  j["spaces"] = json::array({to_json(net.spaces[0]), to_json(net.spaces[1])});
  json c = json::array();
  for (const Matrix& m : net.coordinates) c.push_back(to_json(m));
  j["coordinates"] = c;
  return j;
}

json to_json(const RationalBRep& rep) {
  json j;
  j["space"] = to_json(rep.space);
  j["points"] = to_json(rep.points);
  j["weights"] = to_json(rep.weights);
  j["all_nonneg"] = rep.all_nonneg;
  return j;
}

json to_json(const RationalNet& net) {
  json j;
  j["spaces"] = json::array({to_json(net.spaces[0]), to_json(net.spaces[1])});
  json c = json::array();
  for (const Matrix& m : net.coordinates) c.push_back(to_json(m));
  j["coordinates"] = c;
  j["weights"] = to_json(net.weights);
  j["all_nonneg"] = net.all_nonneg;
  return j;
}

json to_json(const MixedConstruction& mc) {
  json j;
  j["rho"] = to_json(mc.rho);
  j["wronskian"] = to_json(mc.wronskian);
  j["L"] = to_json(mc.L);
  j["U"] = to_json(mc.U);
  j["lambda0"] = to_json(mc.lambda0);
  j["mu"] = to_json(mc.mu);
  return j;
}

json to_json(const CriticalLengthResult& r) {
  json j;
  j["found"] = r.found;
  j["estimate"] = r.found ? json(r.estimate) : json(nullptr);
  j["scanned_to"] = r.scanned_to;
  json zeros = json::array();
  for (std::size_t k = 0; k < r.zeros.size(); ++k) {
    json z;
    z["i"] = r.first_index + static_cast<int>(k);
    z["zero"] = r.zeros[k] ? json(*r.zeros[k]) : json(nullptr);
    zeros.push_back(z);
  }
  j["zeros"] = zeros;
  return j;
}

json error_json(const EcbError& e) {
  json j;
  j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  return j;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    schema("'" + path + "' is not valid JSON: " + ex.what());
  }
}

}  // namespace ecb
