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
#include <span>
#include <string>
#include <vector>

#include "cbcodes/gf.hpp"
#include "cbcodes/multipoly.hpp"

namespace cbcodes {

using Coords = std::vector<gf_t>;

/// Projective point stored by its canonical representative: the first
/// nonzero coordinate is 1.
struct ProjPoint {
  Coords coords;

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Scales `coords` so the first nonzero entry is 1. Throws on the zero vector.
ProjPoint normalize(const GaloisField& field, Coords coords);

/// A reduced zero-dimensional subscheme of P^m: distinct points in
/// ascending lexicographic order of their canonical coordinates.
struct PointSet {
  FieldPtr field;
  int m = 0;
  std::vector<ProjPoint> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  const ProjPoint& operator[](std::size_t i) const { return points[i]; }
  bool contains(const ProjPoint& pt) const;
};

/// Normalises, deduplicates and sorts arbitrary representatives.
PointSet make_point_set(FieldPtr field, int m, std::vector<Coords> reps);

/// Points whose bit is set in `mask` (bit i selects points[i]).
PointSet subset(const PointSet& gamma, std::uint64_t mask);
PointSet subset(const PointSet& gamma, std::span<const std::size_t> indices);

inline constexpr std::int64_t kMaxProjectivePoints = 10'000'000;

/// All of P^m(F_q) in ascending lexicographic order.
PointSet enumerate_projective(int m, const FieldPtr& field);

/// Common zeros of homogeneous forms.
PointSet variety_points(std::span<const Polynomial> polys, int m, const FieldPtr& field);

struct CIValidation {
  std::vector<int> degrees;
  std::int64_t expected = 0;  // product of the degrees
  std::int64_t found = 0;
  bool split = false;   // found == expected
  bool smooth = false;  // Jacobian has rank m at every point

  bool ok() const noexcept { return split && smooth; }
  /// `expected=<n> found=<n> split=<bool> smooth=<bool>`
  std::string to_string() const;
};

/// Checks that m hypersurfaces in P^m meet in exactly prod(d_i) distinct
/// rational points, each a transversal intersection.
CIValidation validate_ci(std::span<const Polynomial> polys, const PointSet& pts);

}  // namespace cbcodes
