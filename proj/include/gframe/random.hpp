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

// Seeded generators for test vectors, unitaries and random families.

#include <cstdint>
#include <random>

#include "gframe/hilbert.hpp"

namespace gframe {

using Rng = std::mt19937_64;

/// Independent stream for sample `index` under `seed`; results do not depend
/// on the order in which indices are visited.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// Entries with i.i.d. standard complex Gaussian real and imaginary parts.
CMatrix random_complex_matrix(Index rows, Index cols, Rng& rng);

CVector random_unit_vector(Index n, Rng& rng);

/// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
CMatrix random_unitary(Index n, Rng& rng);

}  // namespace gframe
