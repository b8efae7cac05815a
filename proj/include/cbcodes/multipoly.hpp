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

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbcodes/gf.hpp"

namespace cbcodes {

/// Exponent vector over x_0..x_m.
struct Monomial {
  std::vector<int> exponents;

  int degree() const noexcept;

  /// Graded-lex: total degree first, then lexicographic with x_0 greatest.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;
};

std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept;

/// Monomials of degree a in m + 1 variables, in decreasing graded-lex
/// order (x_0^a first). Empty for a < 0.
std::vector<Monomial> monomials_of_degree(int m, int a);

/// Sparse polynomial over F_q in x_0..x_m. Never stores a zero coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, gf_t, std::greater<>>;

  Polynomial(FieldPtr field, int m);
  Polynomial(FieldPtr field, int m, Terms terms);

  static Polynomial constant(FieldPtr field, int m, gf_t c);
  static Polynomial variable(FieldPtr field, int m, int index);
  static Polynomial monomial(FieldPtr field, int m, Monomial mono, gf_t c = 1);

  const FieldPtr& field() const noexcept { return field_; }
  int num_vars() const noexcept { return m_ + 1; }
  int ambient_dim() const noexcept { return m_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// The zero polynomial counts as homogeneous.
  bool is_homogeneous() const noexcept;

  gf_t coefficient(const Monomial& mono) const;

  gf_t evaluate(std::span<const gf_t> point) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(gf_t c) const;
  Polynomial pow(int n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Text that parse() reads back to the same polynomial. Extension-field
  /// coefficients are written in powers of w.
  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, gf_t c);

  FieldPtr field_;
  int m_;
  Terms terms_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Formal derivative with integer exponent factors reduced mod p.
Polynomial partial_derivative(const Polynomial& poly, int var);

/// Reads expressions over x0..xm built from integer literals, `w`, `+`,
/// `-`, `*`, `^` (non-negative integer exponents) and parentheses.
Polynomial parse_polynomial(std::string_view text, int m, const FieldPtr& field);

}  // namespace cbcodes
