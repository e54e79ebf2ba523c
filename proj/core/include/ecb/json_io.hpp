// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "ecb/bbasis.hpp"
#include "ecb/ec_space.hpp"
#include "ecb/endpoint.hpp"
#include "ecb/errors.hpp"
#include "ecb/geometry.hpp"
#include "ecb/transform.hpp"

namespace ecb {

using json = nlohmann::ordered_json;

// Schema violations are reported as EcbError(Schema).
json to_json(const SpaceSpec& space);
SpaceSpec space_from_json(const json& j);

json to_json(const Matrix& m);  // array of rows
json to_json(const Vector& v);
Matrix matrix_from_json(const json& j);
Vector vector_from_json(const json& j);

json to_json(const IntegralCurveSpec& spec);
IntegralCurveSpec curve_from_json(const json& j);
json to_json(const SurfaceSpec& spec);
SurfaceSpec surface_from_json(const json& j);

json to_json(const EndpointTables& tables);
json to_json(const TransformMatrix& T);
json to_json(const ControlPolygon& polygon);
json to_json(const ControlNet& net);
json to_json(const RationalBRep& rep);
json to_json(const RationalNet& net);
json to_json(const MixedConstruction& mc);
json to_json(const CriticalLengthResult& res);

json error_json(const EcbError& e);

json parse_json_file(const std::string& path);

}  // namespace ecb
