/* Copyright 2026 The gframe Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace gframe {

enum class ErrorCode {
  InvalidArgument,
  ShapeMismatch,
  NonFinite,
  NotHermitian,
  NotPositiveDefinite,
  NotAFrame,
  DimensionMismatch,
  NotUnitary,
  Singular,
  NotOnBasis,
  NotRieszBasis,
  IsRieszBasis,
  ZeroProbe,
  NotADual,
  DegenerateTheta,
  PremiseNotVerifiable,
  TruncationTooSevere,
  InsufficientNodes,
  NonUniformBlocks,
  ParseError,
  SchemaError,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gframe
