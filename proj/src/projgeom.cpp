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

#include "cbcodes/projgeom.hpp"

#include <algorithm>

#include "cbcodes/error.hpp"
#include "cbcodes/linalg.hpp"

namespace cbcodes {

ProjPoint normalize(const GaloisField& field, Coords coords) {
  auto lead = std::find_if(coords.begin(), coords.end(), [](gf_t c) { return c != 0; });
  if (lead == coords.end())
    throw Error(ErrorKind::FieldMismatch, "the zero vector is not a projective point");
  const gf_t scale = field.inv(*lead);
  for (auto it = lead; it != coords.end(); ++it) *it = field.mul(*it, scale);
  return ProjPoint{std::move(coords)};
}

bool PointSet::contains(const ProjPoint& pt) const {
  return std::binary_search(points.begin(), points.end(), pt);
}

PointSet make_point_set(FieldPtr field, int m, std::vector<Coords> reps) {
  PointSet out{std::move(field), m, {}};
  out.points.reserve(reps.size());
  for (auto& r : reps) {
    if (r.size() != static_cast<std::size_t>(m) + 1)
      throw Error(ErrorKind::FieldMismatch, "point with wrong number of coordinates");
    out.points.push_back(normalize(*out.field, std::move(r)));
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

PointSet subset(const PointSet& gamma, std::uint64_t mask) {
  PointSet out{gamma.field, gamma.m, {}};
  for (std::size_t i = 0; i < gamma.size() && i < 64; ++i)
    if ((mask >> i) & 1U) out.points.push_back(gamma.points[i]);
  return out;
}

PointSet subset(const PointSet& gamma, std::span<const std::size_t> indices) {
  PointSet out{gamma.field, gamma.m, {}};
  out.points.reserve(indices.size());
  for (auto i : indices) out.points.push_back(gamma.points.at(i));
  std::sort(out.points.begin(), out.points.end());
  return out;
}

PointSet enumerate_projective(int m, const FieldPtr& field) {
  const std::int64_t q = field->order();
  std::int64_t count = 0;
  std::int64_t power = 1;
  for (int i = 0; i <= m; ++i) {
    count += power;
    power *= q;
    if (count > kMaxProjectivePoints)
      throw Error(ErrorKind::SpaceTooLarge, "P^" + std::to_string(m) + "(F_" +
                                                std::to_string(q) + ") has too many points");
  }
  PointSet out{field, m, {}};
  out.points.reserve(static_cast<std::size_t>(count));
  const auto dim = static_cast<std::size_t>(m) + 1;
  // Canonical tuples with more leading zeros sort first.
  for (auto lead = dim; lead-- > 0;) {
    Coords c(dim, 0);
    c[lead] = 1;
    for (;;) {
      out.points.push_back(ProjPoint{c});
      auto j = dim;
      while (j-- > lead + 1) {
        if (++c[j] < static_cast<gf_t>(q)) break;
        c[j] = 0;
      }
      if (j == lead) break;
    }
  }
  return out;
}

PointSet variety_points(std::span<const Polynomial> polys, int m, const FieldPtr& field) {
  for (const auto& f : polys) {
    if (!same_field(f.field(), field) || f.ambient_dim() != m)
      throw Error(ErrorKind::FieldMismatch, "polynomial does not live in F_q[x0..xm]");
    if (!f.is_homogeneous())
      throw Error(ErrorKind::NonHomogeneous, f.to_string() + " is not homogeneous");
  }
  PointSet all = enumerate_projective(m, field);
  PointSet out{field, m, {}};
  for (auto& pt : all.points) {
    const bool on_all = std::all_of(polys.begin(), polys.end(),
                                    [&](const Polynomial& f) { return f.evaluate(pt.coords) == 0; });
    if (on_all) out.points.push_back(std::move(pt));
  }
  return out;
}

std::string CIValidation::to_string() const {
  return "expected=" + std::to_string(expected) + " found=" + std::to_string(found) +
         " split=" + (split ? "true" : "false") + " smooth=" + (smooth ? "true" : "false");
}

CIValidation validate_ci(std::span<const Polynomial> polys, const PointSet& pts) {
  const int m = pts.m;
  if (polys.size() != static_cast<std::size_t>(m))
    throw Error(ErrorKind::WrongCount, "a complete intersection in P^" + std::to_string(m) +
                                           " needs " + std::to_string(m) + " hypersurfaces, got " +
                                           std::to_string(polys.size()));
  CIValidation v;
  v.expected = 1;
  for (const auto& f : polys) {
    if (f.degree() < 1)
      throw Error(ErrorKind::DegreeOutOfRange, "hypersurface of degree < 1: " + f.to_string());
    v.degrees.push_back(f.degree());
    v.expected *= f.degree();
  }
  v.found = static_cast<std::int64_t>(pts.size());
  v.split = v.found == v.expected;

  std::vector<std::vector<Polynomial>> jacobian;
  for (const auto& f : polys) {
    auto& row = jacobian.emplace_back();
    for (int j = 0; j <= m; ++j) row.push_back(partial_derivative(f, j));
  }
  const auto& F = *pts.field;
  v.smooth = true;
  for (const auto& pt : pts.points) {
    Matrix jac(m, m + 1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= m; ++j)
        jac(i, j) = jacobian[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate(pt.coords);
    if (rank(F, jac) != m) {
      v.smooth = false;
      break;
    }
  }
  return v;
}

}  // namespace cbcodes
