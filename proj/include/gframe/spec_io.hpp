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

// Frame specification documents:
//
//   {"hilbert_dim": n,
//    "blocks": [{"rows": d, "matrix": [[[re, im], ...], ...]}, ...],
//    "metadata": {"name": "...", "description": "..."}}
//
// Complex entries are two-element [re, im] arrays. Unknown fields are rejected.

#include <optional>
#include <string>
#include <string_view>

#include "gframe/gframe.hpp"

namespace gframe {

struct FrameSpec {
  GFrame frame;
  std::optional<std::string> name;
  std::optional<std::string> description;
};

/// Throws ParseError (with line and column) or SchemaError (naming the field).
FrameSpec parse_spec(std::string_view text);

/// Compact JSON with shortest round-trip decimal for every double.
std::string serialize_spec(const FrameSpec& spec);

}  // namespace gframe
