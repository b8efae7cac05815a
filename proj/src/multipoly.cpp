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

#include "cbcodes/multipoly.hpp"

#include <cctype>
#include <numeric>

#include "cbcodes/error.hpp"

namespace cbcodes {

int Monomial::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents <=> b.exponents;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void fill_monomials(std::vector<int>& exps, std::size_t var, int remaining,
                    std::vector<Monomial>& out) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    out.push_back(Monomial{exps});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    fill_monomials(exps, var + 1, remaining - e, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int m, int a) {
  std::vector<Monomial> out;
  if (a < 0 || m < 0) return out;
  out.reserve(static_cast<std::size_t>(binomial(a + m, m)));
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  fill_monomials(exps, 0, a, out);
  return out;
}

Polynomial::Polynomial(FieldPtr field, int m) : field_(std::move(field)), m_(m) {}

Polynomial::Polynomial(FieldPtr field, int m, Terms terms) : field_(std::move(field)), m_(m) {
  for (const auto& [mono, c] : terms) add_term(mono, c);
}

Polynomial Polynomial::constant(FieldPtr field, int m, gf_t c) {
  Polynomial p(std::move(field), m);
  p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(m) + 1, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(FieldPtr field, int m, int index) {
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  exps.at(static_cast<std::size_t>(index)) = 1;
  return monomial(std::move(field), m, Monomial{std::move(exps)});
}

Polynomial Polynomial::monomial(FieldPtr field, int m, Monomial mono, gf_t c) {
  Polynomial p(std::move(field), m);
  p.add_term(mono, c);
  return p;
}

void Polynomial::add_term(const Monomial& mono, gf_t c) {
  if (mono.exponents.size() != static_cast<std::size_t>(m_) + 1)
    throw Error(ErrorKind::FieldMismatch, "monomial has the wrong number of variables");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (field_->contains(c) && c == 0) return;
    const gf_t v = field_->add(0, c);
    if (v != 0) terms_.emplace(mono, v);
    return;
  }
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [mono, c] : terms_)
    if (mono.degree() != d) return false;
  return true;
}

gf_t Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

gf_t Polynomial::evaluate(std::span<const gf_t> point) const {
  if (point.size() != static_cast<std::size_t>(m_) + 1)
    throw Error(ErrorKind::FieldMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, expected " + std::to_string(m_ + 1));
  const auto& F = *field_;
  gf_t sum = 0;
  for (const auto& [mono, c] : terms_) {
    gf_t t = c;
    for (std::size_t i = 0; i < point.size() && t != 0; ++i)
      if (mono.exponents[i] > 0) t = F.mul(t, F.pow(point[i], mono.exponents[i]));
    sum = F.add(sum, t);
  }
  return sum;
}

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (!same_field(a.field(), b.field()) || a.num_vars() != b.num_vars())
    throw Error(ErrorKind::FieldMismatch, "polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::operator-() const {
  Polynomial out(field_, m_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, field_->neg(c));
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  Polynomial out = a;
  for (const auto& [mono, c] : b.terms_) out.add_term(mono, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  const auto& F = *a.field_;
  Polynomial out(a.field_, a.m_);
  std::vector<int> exps(static_cast<std::size_t>(a.m_) + 1);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ma.exponents[i] + mb.exponents[i];
      out.add_term(Monomial{exps}, F.mul(ca, cb));
    }
  }
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial Polynomial::scaled(gf_t c) const {
  Polynomial out(field_, m_);
  for (const auto& [mono, v] : terms_) out.add_term(mono, field_->mul(v, c));
  return out;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::SyntaxError, "negative exponent");
  Polynomial acc = constant(field_, m_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_field(a.field_, b.field_) && a.m_ == b.m_ && a.terms_ == b.terms_;
}

namespace {

std::string coefficient_text(const GaloisField& F, gf_t c) {
  if (F.degree() == 1) return std::to_string(c);
  const auto d = F.digits(c);
  std::string out;
  int nonzero = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (nonzero++ > 0) out += "+";
    std::string w = i == 0 ? "" : (i == 1 ? "w" : "w^" + std::to_string(i));
    if (i == 0)
      out += std::to_string(d[i]);
    else if (d[i] == 1)
      out += w;
    else
      out += std::to_string(d[i]) + "*" + w;
  }
  return nonzero > 1 ? "(" + out + ")" : out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string vars;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      const int e = mono.exponents[i];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += coefficient_text(*field_, c);
    } else if (c == 1) {
      out += vars;
    } else {
      out += coefficient_text(*field_, c) + "*" + vars;
    }
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& poly, int var) {
  if (var < 0 || var >= poly.num_vars())
    throw Error(ErrorKind::UnknownVariable, "x" + std::to_string(var));
  const auto& F = *poly.field();
  Polynomial::Terms terms;
  for (const auto& [mono, c] : poly.terms()) {
    const int e = mono.exponents[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    const gf_t factor = F.from_int(e);
    if (factor == 0) continue;
    Monomial d = mono;
    d.exponents[static_cast<std::size_t>(var)] -= 1;
    terms.emplace(std::move(d), F.mul(c, factor));
  }
  return Polynomial(poly.field(), poly.ambient_dim(), std::move(terms));
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int m, const FieldPtr& field) : s_(text), m_(m), field_(field) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                            std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
    }
    return v;
  }

  Polynomial expr() {
    Polynomial acc(field_, m_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (!first && !accept('+')) {
        break;
      } else if (first) {
        accept('+');
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      const auto n = integer();
      if (n > 1 << 20) fail("exponent too large");
      base = base.pow(static_cast<int>(n));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Polynomial::constant(field_, m_, field_->from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const auto start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view name = s_.substr(start, pos_ - start);
      if (name == "w") return Polynomial::constant(field_, m_, field_->generator());
      if (name.size() >= 2 && name[0] == 'x') {
        int idx = 0;
        bool digits = true;
        for (char d : name.substr(1)) {
          if (!std::isdigit(static_cast<unsigned char>(d))) {
            digits = false;
            break;
          }
          idx = idx * 10 + (d - '0');
          if (idx > 1 << 16) break;
        }
        if (digits && idx <= m_) return Polynomial::variable(field_, m_, idx);
      }
      throw Error(ErrorKind::UnknownVariable, "'" + std::string(name) + "' is not one of x0..x" +
                                                  std::to_string(m_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int m_;
  const FieldPtr& field_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int m, const FieldPtr& field) {
  return Parser(text, m, field).run();
}

}  // namespace cbcodes
