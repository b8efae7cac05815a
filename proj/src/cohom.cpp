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

#include "cbcodes/cohom.hpp"

#include <cstdio>

#include "cbcodes/evalcode.hpp"

namespace cbcodes {

std::int64_t hilbert_function(const PointSet& gamma, int a) {
  if (a < 0 || gamma.empty()) return 0;
  return rank(*gamma.field, evaluation_matrix(gamma, a).entries);
}

std::int64_t h0(const PointSet& gamma, int a) {
  if (a < 0) return 0;
  return binomial(a + gamma.m, gamma.m) - hilbert_function(gamma, a);
}

std::int64_t h1(const PointSet& gamma, int a) {
  return static_cast<std::int64_t>(gamma.size()) - hilbert_function(gamma, a);
}

bool imposes_independent_conditions(const PointSet& gamma, int a) { return h1(gamma, a) == 0; }

int sigma(const PointSet& gamma) {
  for (int a = static_cast<int>(gamma.size()) - 2; a >= 0; --a)
    if (h1(gamma, a) > 0) return a;
  return -1;
}

CohomologyProfile cohomology_profile(const PointSet& gamma, int a_max) {
  CohomologyProfile out;
  const auto n = static_cast<std::int64_t>(gamma.size());
  for (int a = -1; a <= a_max; ++a) {
    CohomologyRow row;
    row.a = a;
    row.dim_ra = a < 0 ? 0 : binomial(a + gamma.m, gamma.m);
    row.rank = hilbert_function(gamma, a);
    row.h0 = row.dim_ra - row.rank;
    row.h1 = n - row.rank;
    out.rows.push_back(row);
  }
  out.sigma = sigma(gamma);
  return out;
}

std::string CohomologyProfile::to_string() const {
  std::string out;
  char line[96];
  std::snprintf(line, sizeof line, "%6s %8s %6s %8s %6s\n", "a", "dimRa", "rank", "h0", "h1");
  out += line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%6d %8lld %6lld %8lld %6lld\n", r.a,
                  static_cast<long long>(r.dim_ra), static_cast<long long>(r.rank),
                  static_cast<long long>(r.h0), static_cast<long long>(r.h1));
    out += line;
  }
  out += "sigma=" + std::to_string(sigma) + "\n";
  return out;
}

}  // namespace cbcodes
