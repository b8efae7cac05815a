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
#include <string_view>
#include <vector>

#include "cbcodes/gf.hpp"
#include "cbcodes/multipoly.hpp"

namespace cbcodes {

enum class FamilyKind { ExtendedRS, ReedMuller, Hermitian };

std::string_view to_string(FamilyKind kind) noexcept;
/// Accepts `rs`, `extended_rs`, `rm`, `reed_muller`, `hermitian`.
FamilyKind parse_family_kind(std::string_view name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::ExtendedRS;
  int q_base = 0;  // for Hermitian the code lives over F_{q^2}
  int m = 0;
  std::vector<int> degrees;

  std::int64_t expected_points() const noexcept;
  int s() const noexcept;
};

/// Defining equations of a complete intersection, ready for make_ci_setup.
struct Family {
  FamilySpec spec;
  FieldPtr field;
  std::vector<Polynomial> polys;

  /// Variety file text (field, vars and poly lines).
  std::string to_variety_text() const;
};

/// Hyperplanes x_1..x_{m-1} and x_m^q - x_0^{q-1} x_m: the q affine
/// rational points of a line.
Family extended_rs(int q, int m);

/// x_j^q - x_0^{q-1} x_j for j = 1..m: every affine rational point of A^m.
Family reed_muller_ci(int q, int m);

/// Hermitian curve x_1^{q+1} - x_2^q x_0 - x_2 x_0^q cut by the product of
/// x_2 - alpha x_0 over alpha in F_{q^2} with alpha^q + alpha != 0.
Family hermitian_ci(int q);

/// Minimum distance (q - beta) q^(m - 1 - alpha) of the affine Reed-Muller
/// code of degree a = alpha (q - 1) + beta, 0 <= beta <= q - 2.
std::int64_t rm_exact_distance(int q, int m, int a);

}  // namespace cbcodes
