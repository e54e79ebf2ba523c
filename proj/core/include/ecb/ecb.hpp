// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ecb/bbasis.hpp"
#include "ecb/ec_space.hpp"
#include "ecb/endpoint.hpp"
#include "ecb/errors.hpp"
#include "ecb/geometry.hpp"
#include "ecb/json_io.hpp"
#include "ecb/linalg.hpp"
#include "ecb/transform.hpp"
