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
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cbcodes {

/// Field elements are stored as their base-p encoding: the coefficient
/// vector (c_0, ..., c_{e-1}) of c_0 + c_1 w + ... + c_{e-1} w^{e-1} maps to
/// the integer sum c_i p^i. 0 and 1 are the additive and multiplicative
/// identities.
using gf_t = std::uint32_t;

bool is_prime(std::int64_t n) noexcept;

/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::int64_t q) noexcept;

/// Trial division against every monic polynomial of degree <= deg/2.
/// `coeffs` are ascending powers over F_p and must be monic.
bool is_irreducible(int p, std::span<const int> coeffs);

/// F_q for q = p^e <= 2^16, backed by log/antilog tables and a Zech
/// logarithm table for addition in proper extensions.
///
/// Immutable after construction; safe to share across threads.
class GaloisField {
 public:
  using value_type = gf_t;

  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 16;

  /// Validates (p, e, modulus). When `modulus` is omitted, the monic
  /// irreducible of degree e with the smallest base-p encoding is used.
  GaloisField(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  gf_t order() const noexcept { return q_; }
  /// Ascending coefficients, monic, length e + 1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  /// Residue class of the modulus variable. For prime fields with the
  /// default modulus x this is 0.
  gf_t generator() const noexcept { return w_; }
  /// Smallest encoding with multiplicative order q - 1.
  gf_t primitive_element() const noexcept { return primitive_; }

  bool contains(gf_t x) const noexcept { return x < q_; }

  gf_t add(gf_t x, gf_t y) const;
  gf_t sub(gf_t x, gf_t y) const { return add(x, neg(y)); }
  gf_t neg(gf_t x) const;
  gf_t mul(gf_t x, gf_t y) const;
  gf_t inv(gf_t x) const;
  gf_t div(gf_t x, gf_t y) const { return mul(x, inv(y)); }
  gf_t pow(gf_t x, std::int64_t n) const;

  /// Image of an integer under Z -> F_p -> F_q.
  gf_t from_int(std::int64_t n) const noexcept;

  std::vector<int> digits(gf_t x) const;
  gf_t from_digits(std::span<const int> digits) const;

  bool operator==(const GaloisField& other) const noexcept {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
  }

 private:
  void check(gf_t x) const;
  gf_t slow_mul(gf_t x, gf_t y) const;
  gf_t digit_add(gf_t x, gf_t y) const;

  int p_;
  int e_;
  gf_t q_;
  std::vector<int> modulus_;
  gf_t w_ = 0;
  gf_t primitive_ = 1;
  std::vector<gf_t> exp_;           // length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[0] unused
  std::vector<std::int64_t> zech_;  // log(1 + g^i), -1 when 1 + g^i = 0
  std::vector<gf_t> neg_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Builds a shared field handle; see GaloisField's constructor for errors.
FieldPtr make_field(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt);

/// Field of order q = p^e with the default modulus.
FieldPtr make_field_of_order(std::int64_t q);

/// Same field object or structurally identical fields.
inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

}  // namespace cbcodes
