// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include "ecb/errors.hpp"

namespace ecb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpace: return "invalid_space";
    case ErrorKind::IndexOutOfRange: return "index_out_of_range";
    case ErrorKind::OutOfClosedFormRange: return "out_of_closed_form_range";
    case ErrorKind::SingularSystem: return "singular_system";
    case ErrorKind::BeyondCriticalLength: return "beyond_critical_length";
    case ErrorKind::DegenerateBasis: return "degenerate_basis";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::InvalidRationalInput: return "invalid_rational_input";
    case ErrorKind::ProjectionSingular: return "projection_singular";
    case ErrorKind::NotNested: return "not_nested";
    case ErrorKind::NodeChoice: return "node_choice";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::NegativeWeights: return "negative_weights";
  }
  return "unknown";
}

}  // namespace ecb
