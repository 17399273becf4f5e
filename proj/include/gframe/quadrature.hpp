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

#include <vector>

namespace gframe {

/// Gauss-Laguerre rule for the weight e^{-u} on [0, inf): exact for
/// polynomials of degree <= 2 * nodes.size() - 1.
struct GaussLaguerre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction from the symmetric Jacobi matrix.
GaussLaguerre gauss_laguerre(int count);

}  // namespace gframe
