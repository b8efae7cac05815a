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

// Brute-force reference computations used to derive expected values in the
// tests. Nothing here touches the library's tables or elimination code.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

/// F_p[x]/(modulus) with schoolbook multiplication; elements use the same
/// base-p encoding as the library.
struct NaiveField {
  int p;
  int e;
  std::vector<int> modulus;  // ascending, monic
  int q;

  NaiveField(int p_, std::vector<int> modulus_)
      : p(p_), e(static_cast<int>(modulus_.size()) - 1), modulus(std::move(modulus_)), q(1) {
    for (int i = 0; i < e; ++i) q *= p;
  }

  std::vector<int> digits(int x) const {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (auto& c : d) {
      c = x % p;
      x /= p;
    }
    return d;
  }

  int encode(const std::vector<int>& d) const {
    int x = 0;
    for (auto i = d.size(); i-- > 0;) x = x * p + ((d[i] % p) + p) % p;
    return x;
  }

  int add(int x, int y) const {
    auto a = digits(x), b = digits(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
    return encode(a);
  }

  int neg(int x) const {
    auto a = digits(x);
    for (auto& c : a) c = (p - c) % p;
    return encode(a);
  }

  int sub(int x, int y) const { return add(x, neg(y)); }

  int mul(int x, int y) const {
    auto a = digits(x), b = digits(y);
    std::vector<int> prod(static_cast<std::size_t>(2 * e), 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j)
        prod[static_cast<std::size_t>(i + j)] =
            (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
    for (int k = 2 * e - 1; k >= e; --k) {
      const int c = prod[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      for (int i = 0; i <= e; ++i) {
        auto& t = prod[static_cast<std::size_t>(k - e + i)];
        t = ((t - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
      }
    }
    prod.resize(static_cast<std::size_t>(e));
    return encode(prod);
  }

  int pow(int x, int n) const {
    int acc = 1;
    for (int i = 0; i < n; ++i) acc = mul(acc, x);
    return acc;
  }
};

using Vec = std::vector<int>;

/// Every F_q-combination of `gens`, as a set. Grown one generator at a time
/// so the work is bounded by the span size rather than q^|gens|.
inline std::set<Vec> span(const NaiveField& F, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  if (gens.empty()) return out;
  const std::size_t len = gens.front().size();
  out.insert(Vec(len, 0));
  for (const auto& g : gens) {
    if (out.count(g)) continue;
    std::set<Vec> next;
    for (const auto& v : out)
      for (int c = 0; c < F.q; ++c) {
        Vec w = v;
        for (std::size_t i = 0; i < len; ++i) w[i] = F.add(w[i], F.mul(c, g[i]));
        next.insert(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

/// rank = log_q |span|.
inline int span_rank(const NaiveField& F, const std::vector<Vec>& gens) {
  std::size_t size = span(F, gens).size();
  int r = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(F.q);
    ++r;
  }
  return r;
}

inline int weight(const Vec& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

/// Minimum weight of a nonzero vector in the span of `gens`.
inline int min_weight(const NaiveField& F, const std::vector<Vec>& gens) {
  int best = 1 << 30;
  for (const auto& v : span(F, gens)) {
    const int w = weight(v);
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

/// Monomial exponent vectors of degree a in vars variables, any order.
inline std::vector<Vec> exponents(int vars, int a) {
  std::vector<Vec> out;
  Vec cur(static_cast<std::size_t>(vars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == vars - 1) {
      cur[static_cast<std::size_t>(var)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, left - e);
    }
  };
  if (a >= 0) rec(rec, 0, a);
  return out;
}

/// Columns of the evaluation map: one vector (over the points) per monomial.
inline std::vector<Vec> eval_columns(const NaiveField& F, const std::vector<Vec>& points, int a) {
  std::vector<Vec> cols;
  if (points.empty()) return cols;
  for (const auto& mono : exponents(static_cast<int>(points.front().size()), a)) {
    Vec col;
    for (const auto& pt : points) {
      int v = 1;
      for (std::size_t i = 0; i < pt.size(); ++i) v = F.mul(v, F.pow(pt[i], mono[i]));
      col.push_back(v);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

/// Affine points of A^m with x0 = 1 prepended.
inline std::vector<Vec> affine_grid(int q, int m) {
  std::vector<Vec> out;
  Vec cur(static_cast<std::size_t>(m), 0);
  for (;;) {
    Vec pt{1};
    pt.insert(pt.end(), cur.begin(), cur.end());
    out.push_back(pt);
    std::size_t pos = cur.size();
    while (pos > 0 && ++cur[pos - 1] == q) cur[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

}  // namespace oracle
