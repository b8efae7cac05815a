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

#include "cbcodes/cbtheory.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <random>
#include <thread>

#include "cbcodes/cohom.hpp"
#include "cbcodes/error.hpp"

namespace cbcodes {

namespace {

// rank of the evaluation map restricted to the points selected by `mask`.
class SubsetRanks {
 public:
  SubsetRanks(const PointSet& gamma, int a) : field_(*gamma.field), a_(a) {
    if (a >= 0) full_ = evaluation_matrix(gamma, a).entries;
  }

  std::int64_t rank_of(std::uint64_t mask) const {
    if (a_ < 0 || mask == 0) return 0;
    Matrix rows(std::popcount(mask), full_.cols());
    Index r = 0;
    for (Index i = 0; i < full_.rows(); ++i)
      if ((mask >> i) & 1U) rows.row(r++) = full_.row(i);
    return rank(field_, rows);
  }

 private:
  const GaloisField& field_;
  int a_;
  Matrix full_;
};

std::uint64_t full_mask(std::size_t n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_mask_size(const PointSet& gamma) {
  if (gamma.size() > 64)
    throw Error(ErrorKind::SpaceTooLarge, "subset enumeration supports at most 64 points");
}

}  // namespace

CISetup make_ci_setup(std::vector<Polynomial> polys, int m, const FieldPtr& field) {
  CISetup setup;
  setup.gamma = variety_points(polys, m, field);
  setup.validation = validate_ci(polys, setup.gamma);
  if (!setup.validation.ok())
    throw Error(ErrorKind::NotSplit,
                "not a split smooth complete intersection: " + setup.validation.to_string());
  setup.degrees = setup.validation.degrees;
  setup.s = std::accumulate(setup.degrees.begin(), setup.degrees.end(), 0) - m - 1;
  setup.polys = std::move(polys);
  return setup;
}

PointSet residual(const PointSet& gamma, const PointSet& gamma_prime) {
  for (const auto& pt : gamma_prime.points)
    if (!gamma.contains(pt)) throw Error(ErrorKind::NotASubset, "point not in the ambient set");
  PointSet out{gamma.field, gamma.m, {}};
  for (const auto& pt : gamma.points)
    if (!gamma_prime.contains(pt)) out.points.push_back(pt);
  return out;
}

CBIdentity cb_identity(const CISetup& setup, int a, const PointSet& gamma_prime) {
  const PointSet rest = residual(setup.gamma, gamma_prime);
  return CBIdentity{h0(gamma_prime, a) - h0(setup.gamma, a), h1(rest, setup.s - a)};
}

std::string CBReport::to_string() const {
  std::string out = "a=" + std::to_string(a) + " splits=" + std::to_string(splits_checked) +
                    " exhaustive=" + (exhaustive ? "true" : "false") +
                    " violations=" + std::to_string(violations.size()) + "\n";
  char line[128];
  for (const auto& v : violations) {
    std::snprintf(line, sizeof line, "violation mask=0x%llx lhs=%lld rhs=%lld\n",
                  static_cast<unsigned long long>(v.mask), static_cast<long long>(v.lhs),
                  static_cast<long long>(v.rhs));
    out += line;
  }
  return out;
}

CBReport verify_cb_all(const CISetup& setup, int a, std::uint64_t budget, std::uint64_t seed,
                       unsigned threads) {
  require_mask_size(setup.gamma);
  const std::size_t n = setup.size();
  const std::uint64_t all = full_mask(n);
  const SubsetRanks prime_ranks(setup.gamma, a);
  const SubsetRanks rest_ranks(setup.gamma, setup.s - a);
  const std::int64_t dim_ra = a < 0 ? 0 : binomial(a + setup.m(), setup.m());
  const std::int64_t h0_full = dim_ra - prime_ranks.rank_of(all);

  auto check = [&](std::uint64_t mask, std::vector<CBViolation>& out) {
    const std::int64_t lhs = (dim_ra - prime_ranks.rank_of(mask)) - h0_full;
    const std::uint64_t rest = all & ~mask;
    const std::int64_t rhs = std::popcount(rest) - rest_ranks.rank_of(rest);
    if (lhs != rhs) out.push_back(CBViolation{mask, lhs, rhs});
  };

  std::vector<std::uint64_t> masks;
  CBReport report;
  report.a = a;
  report.seed = seed;
  report.exhaustive = n < 64 && (std::uint64_t{1} << n) <= budget;
  if (!report.exhaustive) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < budget; ++i) masks.push_back(rng() & all);
    for (std::size_t t : {std::size_t{0}, std::size_t{1}, n - 1, n})
      for_each_combination(n, t, [&](std::uint64_t m) { masks.push_back(m); });
  }
  const std::uint64_t total = report.exhaustive ? (std::uint64_t{1} << n) : masks.size();
  auto mask_at = [&](std::uint64_t i) { return report.exhaustive ? i : masks[i]; };

  threads = std::max(1U, threads);
  std::vector<std::vector<CBViolation>> found(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    auto work = [&, t] {
      const std::uint64_t begin = total * t / threads;
      const std::uint64_t end = total * (t + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i) check(mask_at(i), found[t]);
    };
    if (threads == 1)
      work();
    else
      pool.emplace_back(work);
  }
  for (auto& th : pool) th.join();

  for (auto& f : found) report.violations.insert(report.violations.end(), f.begin(), f.end());
  std::sort(report.violations.begin(), report.violations.end(),
            [](const CBViolation& x, const CBViolation& y) { return x.mask < y.mask; });
  report.violations.erase(
      std::unique(report.violations.begin(), report.violations.end(),
                  [](const CBViolation& x, const CBViolation& y) { return x.mask == y.mask; }),
      report.violations.end());
  report.splits_checked = total;
  return report;
}

bool verify_projection_injectivity(const CISetup& setup, int a) {
  require_mask_size(setup.gamma);
  const auto n = static_cast<std::int64_t>(setup.size());
  const std::int64_t threshold = std::max<std::int64_t>(0, n - (setup.s - a + 1));
  if (threshold > n) return true;
  const SubsetRanks ranks(setup.gamma, a);
  const std::int64_t full = ranks.rank_of(full_mask(setup.size()));
  bool ok = true;
  for_each_combination(setup.size(), static_cast<std::size_t>(threshold), [&](std::uint64_t mask) {
    if (ok && ranks.rank_of(mask) != full) ok = false;
  });
  return ok;
}

int hansen_bound(const CISetup& setup, int a) {
  if (a < 1 || a > setup.s)
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(a) + " outside [1, s=" +
                                                 std::to_string(setup.s) + "]");
  return setup.s - a + 2;
}

std::string BoundReport::to_string() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d_exact) +
         " bound=" + (bound ? std::to_string(*bound) : std::string("none")) +
         " singleton=" + std::to_string(singleton) + " mds=" + b(mds) +
         " mds_sufficient=" + b(mds_sufficient);
}

BoundReport verify_main_theorem(const CISetup& setup, int a, std::uint64_t cap, unsigned threads,
                                bool check_range) {
  BoundReport r;
  r.a = a;
  if (check_range || (a >= 1 && a <= setup.s)) {
    r.bound = hansen_bound(setup, a);
  } else if (a < 0) {
    throw Error(ErrorKind::DegreeOutOfRange, "degree must be >= 0");
  }
  const EvalCode code = build_code(setup.gamma, a);
  r.distance = min_distance(code, cap, threads);
  r.n = code.n;
  r.k = code.k;
  r.d_exact = r.distance.d;
  r.singleton = code.n - code.k + 1;
  r.mds = r.d_exact == r.singleton;
  r.mds_sufficient = setup.s - a >= (code.n - code.k) - 1;
  return r;
}

bool verify_symmetry(const CISetup& setup) {
  const auto n = static_cast<std::int64_t>(setup.size());
  for (int a = -1; a <= setup.s + 1; ++a)
    if (hilbert_function(setup.gamma, a) + hilbert_function(setup.gamma, setup.s - a) != n)
      return false;
  return true;
}

MdsCorollaryReport verify_mds_corollary(const CISetup& setup, int a, std::uint64_t cap,
                                        unsigned threads) {
  require_mask_size(setup.gamma);
  MdsCorollaryReport r;
  r.a = a;
  const EvalCode code = build_code(setup.gamma, a);
  const auto dist = min_distance(code, cap, threads);
  r.mds = dist.d == code.n - code.k + 1;
  r.h1 = code.n - code.k;
  const SubsetRanks ranks(setup.gamma, setup.s - a);
  r.vanishing = true;
  for_each_combination(setup.size(), static_cast<std::size_t>(r.h1), [&](std::uint64_t mask) {
    if (!r.vanishing) return;
    if (std::popcount(mask) - ranks.rank_of(mask) != 0) {
      r.vanishing = false;
      r.witness = mask;
    }
  });
  return r;
}

bool is_cb_scheme(const PointSet& gamma) {
  if (gamma.size() < 2) return true;
  require_mask_size(gamma);
  const int sig = sigma(gamma);
  if (sig < 0) return true;
  const SubsetRanks ranks(gamma, sig);
  const std::uint64_t all = full_mask(gamma.size());
  const std::int64_t full = ranks.rank_of(all);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (ranks.rank_of(all & ~(std::uint64_t{1} << i)) != full) return false;
  return true;
}

}  // namespace cbcodes
