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

#include <random>

#include "cbcodes/multipoly.hpp"
#include "cbcodes/projgeom.hpp"

namespace cbcodes::testing {

/// Random form of degree `a` with up to `terms` monomials.
inline Polynomial random_form(const FieldPtr& field, int m, int a, int terms, std::mt19937_64& rng) {
  const auto monos = monomials_of_degree(m, a);
  Polynomial::Terms t;
  for (int i = 0; i < terms; ++i) {
    const auto& mono = monos[rng() % monos.size()];
    const gf_t c = static_cast<gf_t>(rng() % field->order());
    if (c != 0) t[mono] = c;
  }
  return Polynomial(field, m, std::move(t));
}

/// Random polynomial mixing degrees 0..max_degree.
inline Polynomial random_poly(const FieldPtr& field, int m, int max_degree, int terms,
                              std::mt19937_64& rng) {
  Polynomial out(field, m);
  for (int i = 0; i < terms; ++i)
    out = out + random_form(field, m, static_cast<int>(rng() % (max_degree + 1)), 1, rng);
  return out;
}

inline Coords random_point(const GaloisField& F, int m, std::mt19937_64& rng) {
  Coords c(static_cast<std::size_t>(m) + 1);
  for (auto& x : c) x = static_cast<gf_t>(rng() % F.order());
  return c;
}

}  // namespace cbcodes::testing
