// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ecb {

enum class ErrorKind {
  InvalidSpace,
  IndexOutOfRange,
  OutOfClosedFormRange,
  SingularSystem,
  BeyondCriticalLength,
  DegenerateBasis,
  DimensionMismatch,
  InvalidRationalInput,
  ProjectionSingular,
  NotNested,
  NodeChoice,
  Schema,
  NegativeWeights,
};

const char* to_string(ErrorKind kind);

class EcbError : public std::runtime_error {
 public:
  EcbError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ecb
