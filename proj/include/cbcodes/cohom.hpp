// Copyright 2026 The cbcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbcodes/projgeom.hpp"

namespace cbcodes {

// Dimensions attached to the ideal sheaf of a reduced point set, all read
// off the rank of the evaluation map e_a. For a < 0 the degree piece R_a is
// zero: rank 0, h0 = 0, h1 = |gamma|.

/// rank(e_a) = dim (R/I)_a.
std::int64_t hilbert_function(const PointSet& gamma, int a);
/// Forms of degree a vanishing on gamma: dim R_a - rank(e_a).
std::int64_t h0(const PointSet& gamma, int a);
/// Failure to impose independent conditions: |gamma| - rank(e_a).
std::int64_t h1(const PointSet& gamma, int a);
bool imposes_independent_conditions(const PointSet& gamma, int a);
/// Largest a with h1(a) > 0, scanning down from |gamma| - 2; -1 when none.
int sigma(const PointSet& gamma);

struct CohomologyRow {
  int a = 0;
  std::int64_t dim_ra = 0;
  std::int64_t rank = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
};

struct CohomologyProfile {
  std::vector<CohomologyRow> rows;  // a = -1 .. a_max
  int sigma = -1;

  /// Fixed-width `a dimRa rank h0 h1` table followed by `sigma=<i>`.
  std::string to_string() const;
};

CohomologyProfile cohomology_profile(const PointSet& gamma, int a_max);

}  // namespace cbcodes
