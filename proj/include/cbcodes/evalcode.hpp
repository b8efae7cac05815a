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
#include <span>
#include <string>
#include <vector>

#include "cbcodes/linalg.hpp"
#include "cbcodes/multipoly.hpp"
#include "cbcodes/projgeom.hpp"

namespace cbcodes {

/// Matrix of e_a: entry (i, j) is the j-th degree-a monomial (decreasing
/// graded-lex) evaluated at the i-th point.
struct EvalMatrix {
  Matrix entries;
  int degree = 0;
  std::vector<Monomial> monomials;
};

EvalMatrix evaluation_matrix(const PointSet& gamma, int a);

/// Same matrix built from arbitrary (not necessarily canonical)
/// representatives; row i is scaled by lambda_i^a relative to the
/// canonical one.
EvalMatrix evaluation_matrix(const GaloisField& field, int m, std::span<const Coords> reps, int a);

struct RankKernel {
  Index rank = 0;
  /// Rows are coefficient vectors (in monomial order) of degree-a forms
  /// vanishing on every point.
  Matrix kernel;
};

RankKernel rank_and_kernel(const GaloisField& field, const EvalMatrix& m);

inline constexpr int kNormalizerTrials = 10'000;

/// A degree-a form with no zero on gamma: x0^a when that works, otherwise
/// a seeded random search over R_a.
Polynomial choose_f0(const PointSet& gamma, int a, std::uint64_t seed = 0);

/// The evaluation code C(gamma)_a.
struct EvalCode {
  PointSet gamma;
  int degree = 0;
  Index n = 0;
  Index k = 0;
  Matrix gen;  // k x n, reduced row-echelon
  std::optional<Polynomial> f0;

  const FieldPtr& field() const noexcept { return gamma.field; }
};

/// Without f0 the unnormalised image of e_a is used. It is diagonally
/// equivalent to any normalised one, so n, k and all weights agree.
EvalCode build_code(const PointSet& gamma, int a, const std::optional<Polynomial>& f0 = std::nullopt);

/// Code spanned by the columns of an evaluation matrix for `gamma`.
EvalCode code_from_evaluation_matrix(const PointSet& gamma, const EvalMatrix& m);

struct DistanceResult {
  std::int64_t d = 0;
  std::uint64_t codewords_scanned = 0;
  bool exact = true;

  /// `d=<d> exact=true scanned=<count>`
  std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 22;

/// Number of messages an exhaustive scan of `code` visits: one
/// representative per projective class, (q^k - 1) / (q - 1).
std::uint64_t projective_message_count(const EvalCode& code);

/// Exhaustive scan over projective message classes. Throws CapExceeded
/// when more than `cap` classes would be visited. The empty code reports
/// d = 0.
DistanceResult min_distance(const EvalCode& code, std::uint64_t cap = kDefaultDistanceCap,
                            unsigned threads = 1);

/// counts[w] = number of codewords of Hamming weight w, zero word included.
std::vector<std::uint64_t> weight_distribution(const EvalCode& code,
                                               std::uint64_t cap = kDefaultDistanceCap,
                                               unsigned threads = 1);

inline bool singleton_holds(const EvalCode& code, const DistanceResult& r) {
  return r.d <= code.n - code.k + 1;
}

}  // namespace cbcodes
