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

#include "cbcodes/gf.hpp"

#include <string>

#include "cbcodes/error.hpp"

namespace cbcodes {

namespace {

int mod_p(std::int64_t v, int p) {
  auto r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

// Remainder of `num` modulo the monic `den`, coefficients ascending over F_p.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
  const auto dd = den.size() - 1;
  while (num.size() > dd) {
    const int lead = num.back();
    const auto shift = num.size() - 1 - dd;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dd; ++i)
        num[shift + i] = mod_p(num[shift + i] - std::int64_t{lead} * den[i], p);
    }
    num.pop_back();
  }
  return num;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::int64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), e);
}

bool is_irreducible(int p, std::span<const int> coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1) return false;
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg == 1) return true;
  std::vector<int> num(coeffs.begin(), coeffs.end());
  for (int d = 1; d <= deg / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    std::vector<int> divisor(static_cast<std::size_t>(d) + 1, 0);
    divisor[static_cast<std::size_t>(d)] = 1;
    for (std::int64_t t = 0; t < count; ++t) {
      std::int64_t v = t;
      for (int i = 0; i < d; ++i) {
        divisor[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
        v /= p;
      }
      auto rem = poly_rem(num, divisor, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

GaloisField::GaloisField(int p, int e, std::optional<std::vector<int>> modulus) : p_(p), e_(e) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::DegreeOutOfRange, "extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^16");
  }
  q_ = static_cast<gf_t>(q);

  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != static_cast<std::size_t>(e) + 1 || m.back() != 1)
      throw Error(ErrorKind::ReducibleModulus,
                  "modulus must be monic of degree " + std::to_string(e));
    for (int c : m)
      if (c < 0 || c >= p)
        throw Error(ErrorKind::ReducibleModulus, "modulus coefficient outside [0, p)");
    if (!is_irreducible(p, m))
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    modulus_ = m;
  } else {
    std::vector<int> m(static_cast<std::size_t>(e) + 1, 0);
    m.back() = 1;
    for (std::int64_t t = 0; t < q; ++t) {
      std::int64_t v = t;
      for (int i = 0; i < e; ++i) {
        m[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
        v /= p;
      }
      if (is_irreducible(p, m)) break;
    }
    modulus_ = m;
  }

  if (e == 1) {
    w_ = static_cast<gf_t>(mod_p(-modulus_[0], p));
  } else {
    w_ = static_cast<gf_t>(p);
  }

  neg_.resize(q_);
  for (gf_t x = 0; x < q_; ++x) {
    auto d = digits(x);
    for (int& c : d) c = mod_p(-c, p_);
    neg_[x] = from_digits(d);
  }

  // Smallest element whose order is exactly q - 1.
  const std::int64_t group = q - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](gf_t x, std::int64_t n) {
    gf_t acc = 1;
    while (n > 0) {
      if (n & 1) acc = slow_mul(acc, x);
      x = slow_mul(x, x);
      n >>= 1;
    }
    return acc;
  };
  for (gf_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto r : factors) ok = ok && slow_pow(g, group / r) != 1;
    if (ok) {
      primitive_ = g;
      break;
    }
  }

  exp_.resize(static_cast<std::size_t>(2 * group));
  log_.assign(q_, 0);
  gf_t acc = 1;
  for (std::int64_t i = 0; i < group; ++i) {
    exp_[static_cast<std::size_t>(i)] = acc;
    exp_[static_cast<std::size_t>(i + group)] = acc;
    log_[acc] = static_cast<std::uint32_t>(i);
    acc = slow_mul(acc, primitive_);
  }

  if (p_ != 2 && e_ > 1) {
    zech_.resize(static_cast<std::size_t>(group));
    for (std::int64_t i = 0; i < group; ++i) {
      const gf_t s = digit_add(1, exp_[static_cast<std::size_t>(i)]);
      zech_[static_cast<std::size_t>(i)] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
    }
  }
}

std::vector<int> GaloisField::digits(gf_t x) const {
  std::vector<int> d(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(x % static_cast<gf_t>(p_));
    x /= static_cast<gf_t>(p_);
  }
  return d;
}

gf_t GaloisField::from_digits(std::span<const int> d) const {
  gf_t x = 0;
  for (auto i = d.size(); i-- > 0;) x = x * static_cast<gf_t>(p_) + static_cast<gf_t>(mod_p(d[i], p_));
  return x;
}

gf_t GaloisField::digit_add(gf_t x, gf_t y) const {
  auto a = digits(x);
  const auto b = digits(y);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p_;
  return from_digits(a);
}

gf_t GaloisField::slow_mul(gf_t x, gf_t y) const {
  const auto a = digits(x);
  const auto b = digits(y);
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = mod_p(prod[i + j] + std::int64_t{a[i]} * b[j], p_);
  auto rem = poly_rem(std::move(prod), modulus_, p_);
  rem.resize(static_cast<std::size_t>(e_), 0);
  return from_digits(rem);
}

void GaloisField::check(gf_t x) const {
  if (x >= q_)
    throw Error(ErrorKind::FieldMismatch,
                std::to_string(x) + " is not an element of F_" + std::to_string(q_));
}

gf_t GaloisField::add(gf_t x, gf_t y) const {
  check(x);
  check(y);
  if (p_ == 2) return x ^ y;
  if (e_ == 1) return (x + y) % q_;
  if (x == 0) return y;
  if (y == 0) return x;
  const std::int64_t group = static_cast<std::int64_t>(q_) - 1;
  const std::int64_t lx = log_[x];
  std::int64_t k = static_cast<std::int64_t>(log_[y]) - lx;
  if (k < 0) k += group;
  const auto z = zech_[static_cast<std::size_t>(k)];
  if (z < 0) return 0;
  return exp_[static_cast<std::size_t>(lx + z)];
}

gf_t GaloisField::neg(gf_t x) const {
  check(x);
  return neg_[x];
}

gf_t GaloisField::mul(gf_t x, gf_t y) const {
  check(x);
  check(y);
  if (x == 0 || y == 0) return 0;
  return exp_[log_[x] + log_[y]];
}

gf_t GaloisField::inv(gf_t x) const {
  check(x);
  if (x == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t group = q_ - 1;
  return exp_[(group - log_[x]) % group];
}

gf_t GaloisField::pow(gf_t x, std::int64_t n) const {
  check(x);
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  gf_t acc = 1;
  while (n > 0) {
    if (n & 1) acc = mul(acc, x);
    x = mul(x, x);
    n >>= 1;
  }
  return acc;
}

gf_t GaloisField::from_int(std::int64_t n) const noexcept { return static_cast<gf_t>(mod_p(n, p_)); }

FieldPtr make_field(int p, int e, std::optional<std::vector<int>> modulus) {
  return std::make_shared<const GaloisField>(p, e, std::move(modulus));
}

FieldPtr make_field_of_order(std::int64_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(pe->first, pe->second);
}

}  // namespace cbcodes
