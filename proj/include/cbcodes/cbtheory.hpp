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
#include <optional>
#include <string>
#include <vector>

#include "cbcodes/evalcode.hpp"
#include "cbcodes/multipoly.hpp"
#include "cbcodes/projgeom.hpp"

namespace cbcodes {

/// A validated split, smooth complete intersection of m hypersurfaces in
/// P^m together with its socle degree s = sum(d_i) - m - 1.
struct CISetup {
  std::vector<Polynomial> polys;
  PointSet gamma;
  std::vector<int> degrees;
  int s = -1;
  CIValidation validation;

  std::size_t size() const noexcept { return gamma.size(); }
  int m() const noexcept { return gamma.m; }
};

/// Enumerates the common zeros and validates them. Throws WrongCount when
/// polys.size() != m and NotSplit when the intersection is not split and
/// smooth.
CISetup make_ci_setup(std::vector<Polynomial> polys, int m, const FieldPtr& field);

/// For reduced point sets the residual scheme is the complement.
PointSet residual(const PointSet& gamma, const PointSet& gamma_prime);

struct CBIdentity {
  std::int64_t lhs = 0;  // h0(I_{G'}(a)) - h0(I_G(a))
  std::int64_t rhs = 0;  // h1(I_{G''}(s - a))

  bool holds() const noexcept { return lhs == rhs; }
};

CBIdentity cb_identity(const CISetup& setup, int a, const PointSet& gamma_prime);

struct CBViolation {
  std::uint64_t mask = 0;  // bit i set when points[i] is in G'
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct CBReport {
  int a = 0;
  std::uint64_t splits_checked = 0;
  std::vector<CBViolation> violations;  // sorted by mask
  bool exhaustive = false;
  std::uint64_t seed = 0;

  /// `a=<a> splits=<n> exhaustive=<bool> violations=<count>`, then one
  /// `violation mask=0x.. lhs=.. rhs=..` line per violation.
  std::string to_string() const;
};

/// Checks the residual identity on every split G = G' u G'' when 2^|G| <=
/// budget; otherwise on `budget` seeded random splits plus every split with
/// |G'| in {0, 1, |G|-1, |G|}.
CBReport verify_cb_all(const CISetup& setup, int a, std::uint64_t budget, std::uint64_t seed,
                       unsigned threads = 1);

/// Puncturing C(G)_a down to any G' with |G'| >= |G| - (s - a + 1) is
/// injective, i.e. h0(I_{G'}(a)) = h0(I_G(a)) for all such G'.
bool verify_projection_injectivity(const CISetup& setup, int a);

/// s - a + 2, valid for 1 <= a <= s.
int hansen_bound(const CISetup& setup, int a);

struct BoundReport {
  int a = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d_exact = 0;
  std::optional<std::int64_t> bound;  // absent outside 1 <= a <= s
  std::int64_t singleton = 0;
  bool mds = false;
  bool mds_sufficient = false;  // s - a >= h1(I_G(a)) - 1
  DistanceResult distance;

  bool bound_holds() const noexcept { return !bound || d_exact >= *bound; }
  /// `n= k= d= bound= singleton= mds= mds_sufficient=`
  std::string to_string() const;
};

/// Builds C(G)_a, finds its exact minimum distance and compares it with the
/// lower bound and the Singleton bound. `check_range` = false allows any
/// a >= 0 and leaves `bound` empty outside 1..s.
BoundReport verify_main_theorem(const CISetup& setup, int a,
                                std::uint64_t cap = kDefaultDistanceCap, unsigned threads = 1,
                                bool check_range = true);

/// rank(e_a) + rank(e_{s-a}) = |G| for every a in [-1, s + 1].
bool verify_symmetry(const CISetup& setup);

struct MdsCorollaryReport {
  int a = 0;
  std::int64_t h1 = 0;     // h1(I_G(a)), the size of the tested G''
  bool mds = false;        // exact MDS status of C(G)_a
  bool vanishing = false;  // h1(I_{G''}(s - a)) = 0 for every |G''| = h1
  std::optional<std::uint64_t> witness;  // first G'' where it does not vanish

  bool agree() const noexcept { return mds == vanishing; }
};

MdsCorollaryReport verify_mds_corollary(const CISetup& setup, int a,
                                        std::uint64_t cap = kDefaultDistanceCap,
                                        unsigned threads = 1);

/// Dropping any single point leaves the forms of degree sigma vanishing on
/// the rest unchanged. Sets with fewer than two points count as CB.
bool is_cb_scheme(const PointSet& gamma);

/// Calls fn(mask) for every subset of {0..n-1} of size t, masks ascending.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t t, Fn&& fn) {
  if (t > n || n > 64) return;
  if (t == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t mask = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
  for (;;) {
    fn(mask);
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0) return;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (limit != 0 && mask >= limit) return;
  }
}

}  // namespace cbcodes
