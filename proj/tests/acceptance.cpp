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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cbcodes/cbtheory.hpp"
#include "cbcodes/cli.hpp"
#include "cbcodes/cohom.hpp"
#include "cbcodes/error.hpp"
#include "cbcodes/families.hpp"
#include "cbcodes/linalg.hpp"

namespace {

using namespace cbcodes;

struct Named {
  std::string name;
  CISetup setup;
};

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::uint64_t checks() const { return checks_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<std::string> messages_;
};

CISetup setup_of(const Family& fam) { return make_ci_setup(fam.polys, fam.spec.m, fam.field); }

CISetup parsed(int p, int m, const std::vector<std::string>& polys) {
  auto F = make_field(p, 1);
  std::vector<Polynomial> ps;
  for (const auto& t : polys) ps.push_back(parse_polynomial(t, m, F));
  return make_ci_setup(std::move(ps), m, F);
}

// Setups whose codes can be scanned exhaustively for every 1 <= a <= s.
std::vector<Named> scan_corpus() {
  std::vector<Named> out;
  out.push_back({"two conics F_5", parsed(5, 2, {"x1^2 - x0^2", "x2^2 - x0^2"})});
  out.push_back({"reed-muller q=3 m=2", setup_of(reed_muller_ci(3, 2))});
  out.push_back({"reed-muller q=2 m=3", setup_of(reed_muller_ci(2, 3))});
  out.push_back({"hermitian q=2", setup_of(hermitian_ci(2))});
  out.push_back({"extended rs q=5 m=1", setup_of(extended_rs(5, 1))});
  out.push_back({"extended rs q=7 m=1", setup_of(extended_rs(7, 1))});
  out.push_back({"extended rs q=8 m=2", setup_of(extended_rs(8, 2))});
  out.push_back({"extended rs q=4 m=3", setup_of(extended_rs(4, 3))});
  out.push_back({"three quadrics F_3", parsed(3, 3, {"x1^2 - x0^2", "x2^2 - x0^2", "x3^2 - x0^2"})});
  out.push_back({"conic and cubic F_7", parsed(7, 2, {"x1^2 - x0^2", "x2^3 - x0^2*x2"})});
  return out;
}

// The scan corpus plus setups too large for a full distance scan.
std::vector<Named> full_corpus() {
  auto out = scan_corpus();
  out.push_back({"hermitian q=3", setup_of(hermitian_ci(3))});
  out.push_back({"reed-muller q=4 m=2", setup_of(reed_muller_ci(4, 2))});
  return out;
}

bool within_cap(const EvalCode& code) { return projective_message_count(code) <= kDefaultDistanceCap; }

// For k = n - 1 the code is the kernel of one parity row h and d = 2 exactly
// when h has no zero entry.
bool corank_one_is_mds(const EvalCode& code) {
  const auto h = kernel_basis(*code.field(), code.gen);
  if (h.rows() != 1) return false;
  return (h.array() != 0U).all();
}

constexpr unsigned kThreads = 4;

void criterion_1(Check& c) {
  for (int q : {5, 7, 8, 9})
    for (int m : {1, 2}) {
      const auto setup = setup_of(extended_rs(q, m));
      std::int64_t qa = q;
      for (int a = 1; a <= q - 2; ++a) {
        qa *= q;  // q^(a+1)
        if (qa > (std::int64_t{1} << 22)) break;
        const auto code = build_code(setup.gamma, a);
        const auto d = min_distance(code, kDefaultDistanceCap, kThreads);
        const std::string tag = "q=" + std::to_string(q) + " m=" + std::to_string(m) + " a=" + std::to_string(a);
        c.expect(code.n == q, tag + " n");
        c.expect(code.k == a + 1, tag + " k");
        c.expect(d.exact && d.d == q - a && d.d == code.n - code.k + 1, tag + " d=" + std::to_string(d.d));
      }
    }
}

void criterion_2(Check& c) {
  const auto rm32 = setup_of(reed_muller_ci(3, 2));
  const int exact32[] = {0, 6, 3, 2};
  const int bound32[] = {0, 4, 3, 2};
  for (int a = 1; a <= 3; ++a) {
    const auto r = verify_main_theorem(rm32, a, kDefaultDistanceCap, kThreads);
    const std::string tag = "q=3 m=2 a=" + std::to_string(a);
    c.expect(r.d_exact == exact32[a] && rm_exact_distance(3, 2, a) == exact32[a], tag + " exact");
    c.expect(hansen_bound(rm32, a) == bound32[a] && r.d_exact >= bound32[a], tag + " bound");
    if (a >= 2) c.expect(r.d_exact == bound32[a], tag + " equality");
  }
  const auto rm23 = setup_of(reed_muller_ci(2, 3));
  const int exact23[] = {0, 4, 2};
  for (int a = 1; a <= 2; ++a) {
    const auto r = verify_main_theorem(rm23, a, kDefaultDistanceCap, kThreads);
    const std::string tag = "q=2 m=3 a=" + std::to_string(a);
    c.expect(r.d_exact == exact23[a] && rm_exact_distance(2, 3, a) == exact23[a], tag + " exact");
    c.expect(r.d_exact >= rm23.s - a + 2, tag + " bound");
  }
}

void criterion_3(Check& c) {
  const auto h = setup_of(hermitian_ci(2));
  c.expect(h.gamma.field->order() == 4, "field F_4");
  c.expect(h.size() == 6, "six points");
  c.expect(h.s == 2, "s=2");
  const auto r = verify_main_theorem(h, 2, kDefaultDistanceCap, kThreads);
  c.expect(r.n == 6 && r.k == 5 && r.d_exact == 2 && r.d_exact >= 2 && r.mds, r.to_string());
}

void criterion_4(Check& c) {
  struct Case {
    Named named;
    int a_max;
    std::uint64_t splits;
  };
  auto corpus = scan_corpus();
  const std::vector<Case> cases{{corpus[0], 3, 16}, {corpus[1], 5, 512}, {corpus[3], 4, 64}};
  for (const auto& cs : cases)
    for (int a = 0; a <= cs.a_max; ++a) {
      const auto r = verify_cb_all(cs.named.setup, a, 100000, 0, kThreads);
      c.expect(r.exhaustive && r.splits_checked == cs.splits && r.violations.empty(),
               cs.named.name + " " + r.to_string());
    }
}

void criterion_5(Check& c, std::string& detail) {
  const auto corpus = scan_corpus();
  int pairs = 0;
  for (const auto& [name, setup] : corpus) {
    for (int a = 1; a <= setup.s; ++a) {
      const auto code = build_code(setup.gamma, a);
      const bool top = a == setup.s;
      c.expect(within_cap(code) || !top, name + " C_s beyond cap");
      if (!within_cap(code)) continue;
      const auto r = verify_main_theorem(setup, a, kDefaultDistanceCap, kThreads);
      ++pairs;
      c.expect(r.bound_holds(), name + " a=" + std::to_string(a) + " " + r.to_string());
      if (top) c.expect(r.mds, name + " C_s not MDS: " + r.to_string());
    }
  }
  // Larger setups: the bound wherever a scan fits, and the top code through
  // its single parity row.
  int extra = 0;
  for (const auto& [name, setup] : full_corpus()) {
    if (name != "hermitian q=3" && name != "reed-muller q=4 m=2") continue;
    for (int a = 1; a <= setup.s; ++a) {
      const auto code = build_code(setup.gamma, a);
      if (!within_cap(code)) continue;
      const auto r = verify_main_theorem(setup, a, kDefaultDistanceCap, kThreads);
      ++extra;
      c.expect(r.bound_holds(), name + " a=" + std::to_string(a) + " " + r.to_string());
    }
    const auto top = build_code(setup.gamma, setup.s);
    c.expect(top.k == top.n - 1 && corank_one_is_mds(top), name + " C_s parity row");
  }
  detail = std::to_string(corpus.size()) + " scanned setups, " + std::to_string(pairs + extra) +
           " exhaustive (setup, a) pairs";
}

void criterion_6(Check& c) {
  for (const auto& [name, setup] : full_corpus()) {
    c.expect(verify_symmetry(setup), name + " symmetry");
    for (int a = -1; a <= setup.s + 1; ++a)
      c.expect(hilbert_function(setup.gamma, a) + hilbert_function(setup.gamma, setup.s - a) ==
                   static_cast<std::int64_t>(setup.size()),
               name + " rank sum a=" + std::to_string(a));
    c.expect(sigma(setup.gamma) == setup.s, name + " sigma");
  }
}

void criterion_7(Check& c) {
  const auto corpus = full_corpus();
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 200; ++i) {
    const auto& [name, setup] = corpus[static_cast<std::size_t>(i) % corpus.size()];
    const auto n = setup.size();
    const std::uint64_t mask = n == 64 ? rng() : rng() & ((std::uint64_t{1} << n) - 1);
    const auto sub = subset(setup.gamma, mask);
    const int size = static_cast<int>(sub.size());
    for (int j = std::max(0, size - 1); j <= size + 2; ++j)
      c.expect(h1(sub, j) == 0, name + " mask=" + std::to_string(mask) + " j=" + std::to_string(j));
  }
}

void criterion_8(Check& c, std::string& detail) {
  int pairs = 0;
  for (const auto& [name, setup] : full_corpus())
    for (int a = 1; a <= setup.s; ++a) {
      if (!within_cap(build_code(setup.gamma, a))) continue;
      const auto r = verify_mds_corollary(setup, a, kDefaultDistanceCap, kThreads);
      ++pairs;
      c.expect(r.agree(), name + " a=" + std::to_string(a));
    }
  detail = std::to_string(pairs) + " (setup, a) pairs";
}

bool field_axioms(const GaloisField& F) {
  const gf_t q = F.order();
  for (gf_t x = 0; x < q; ++x) {
    if (F.add(x, 0) != x || F.mul(x, 1) != x || F.add(x, F.neg(x)) != 0) return false;
    if (x != 0 && F.mul(x, F.inv(x)) != 1) return false;
    for (gf_t y = 0; y < q; ++y) {
      if (F.add(x, y) != F.add(y, x) || F.mul(x, y) != F.mul(y, x)) return false;
      for (gf_t z = 0; z < q; ++z) {
        if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) return false;
        if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) return false;
        if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z))) return false;
      }
    }
  }
  return true;
}

std::string run_captured(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "cbcodes");
  const int rc = run_cli(std::move(args), out, err);
  return "rc=" + std::to_string(rc) + "\n" + out.str();
}

void criterion_9(Check& c) {
  // Field axioms, exhaustive for every q <= 64.
  for (int q = 2; q <= 64; ++q) {
    if (!prime_power(q)) continue;
    c.expect(field_axioms(*make_field_of_order(q)), "field axioms q=" + std::to_string(q));
  }

  // Homogeneous scaling F(lambda x) = lambda^d F(x).
  std::mt19937_64 rng(9);
  for (int q : {5, 8, 9, 49}) {
    const auto F = make_field_of_order(q);
    for (int trial = 0; trial < 200; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 3);
      const int d = static_cast<int>(rng() % 6);
      Polynomial f(F, m);
      for (const auto& mono : monomials_of_degree(m, d))
        if (rng() % 2) f = f + Polynomial::monomial(F, m, mono, static_cast<gf_t>(rng() % F->order()));
      Coords x(static_cast<std::size_t>(m) + 1);
      for (auto& v : x) v = static_cast<gf_t>(rng() % F->order());
      const auto lambda = static_cast<gf_t>(rng() % F->order());
      Coords y = x;
      for (auto& v : y) v = F->mul(v, lambda);
      c.expect(f.evaluate(y) == F->mul(F->pow(lambda, d), f.evaluate(x)), "scaling " + f.to_string());
    }
  }

  // Singleton bound on every code of the scan corpus in the full degree window.
  for (const auto& [name, setup] : scan_corpus())
    for (int a = 0; a <= setup.s + 1; ++a) {
      const auto code = build_code(setup.gamma, a);
      if (!within_cap(code)) continue;
      c.expect(singleton_holds(code, min_distance(code, kDefaultDistanceCap, kThreads)),
               name + " singleton a=" + std::to_string(a));
    }

  // Normaliser independence of the weight distribution, and representative
  // independence of (n, k, d).
  const auto corpus = scan_corpus();
  const std::vector<std::pair<std::size_t, int>> picks{{0, 1}, {1, 2}, {3, 2}, {9, 1}};
  for (const auto& [idx, a] : picks) {
    const auto& [name, setup] = corpus[idx];
    const auto& g = setup.gamma;
    const auto& F = *g.field;
    const auto base = build_code(g, a);
    const auto dist = weight_distribution(base, kDefaultDistanceCap, kThreads);
    int found = 0;
    for (int trial = 0; trial < 2000 && found < 3; ++trial) {
      Polynomial f0(g.field, g.m);
      for (const auto& mono : monomials_of_degree(g.m, a))
        f0 = f0 + Polynomial::monomial(g.field, g.m, mono, static_cast<gf_t>(rng() % F.order()));
      bool ok = true;
      for (const auto& p : g.points) ok = ok && f0.evaluate(p.coords) != 0;
      if (!ok) continue;
      ++found;
      c.expect(weight_distribution(build_code(g, a, f0), kDefaultDistanceCap, kThreads) == dist,
               name + " normaliser " + f0.to_string());
    }
    c.expect(found == 3, name + " normalisers found");

    std::vector<Coords> reps;
    for (const auto& p : g.points) {
      const gf_t lambda = 1 + static_cast<gf_t>(rng() % (F.order() - 1));
      Coords v = p.coords;
      for (auto& x : v) x = F.mul(x, lambda);
      reps.push_back(v);
    }
    const auto scaled = code_from_evaluation_matrix(g, evaluation_matrix(F, g.m, reps, a));
    c.expect(scaled.n == base.n && scaled.k == base.k &&
                 min_distance(scaled).d == min_distance(base).d,
             name + " representatives");
  }

  // Byte-stable reports across thread counts.
  const auto dir = std::filesystem::temp_directory_path() / "cbcodes_acceptance";
  std::filesystem::create_directories(dir);
  const auto rm = (dir / "rm.var").string();
  const auto rs = (dir / "rs.var").string();
  std::ofstream(rm) << reed_muller_ci(3, 2).to_variety_text();
  std::ofstream(rs) << extended_rs(8, 2).to_variety_text();
  const std::vector<std::vector<std::string>> commands{
      {"analyze", rm, "-a", "2", "--emit-matrix"},
      {"analyze", rs, "-a", "5"},
      {"cb", rm, "--degrees", "0..5"},
      {"cb", rs, "--degrees", "0..6", "--budget", "64", "--seed", "5"},
      {"hilbert", rm},
      {"points", rs},
  };
  for (const auto& cmd : commands) {
    auto one = cmd;
    auto four = cmd;
    one.insert(one.begin(), {"--threads", "1"});
    four.insert(four.begin(), {"--threads", "4"});
    const auto a = run_captured(one);
    c.expect(a.rfind("rc=0\n", 0) == 0 && a == run_captured(four), "threads " + cmd[0]);
  }
  std::filesystem::remove_all(dir);
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&, std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "extended Reed-Solomon codes are MDS", 30, [](Check& c, std::string&) { criterion_1(c); }},
      {2, "Reed-Muller exact distance and bound", 10, [](Check& c, std::string&) { criterion_2(c); }},
      {3, "Hermitian q=2 code", 5, [](Check& c, std::string&) { criterion_3(c); }},
      {4, "Cayley-Bacharach identity over all splits", 60, [](Check& c, std::string&) { criterion_4(c); }},
      {5, "distance bound and MDS top code", 0, criterion_5},
      {6, "Hilbert symmetry and sigma = s", 0, [](Check& c, std::string&) { criterion_6(c); }},
      {7, "vanishing for j >= |G''| - 1", 0, [](Check& c, std::string&) { criterion_7(c); }},
      {8, "MDS iff residual vanishing", 0, criterion_8},
      {9, "property suites", 0, [](Check& c, std::string&) { criterion_9(c); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check, detail);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0)
      check.expect(secs < cr.limit_seconds, "runtime " + std::to_string(secs) + "s over limit");
    const bool ok = check.ok();
    failed += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s  (%llu checks%s%s, %.2fs)\n", cr.id, ok ? "PASS" : "FAIL",
                cr.title.c_str(), static_cast<unsigned long long>(check.checks()),
                detail.empty() ? "" : ", ", detail.c_str(), secs);
    for (const auto& m : check.messages()) std::printf("    %s\n", m.c_str());
  }
  std::printf("%s\n", failed == 0 ? "ALL PASS" : "FAILURES PRESENT");
  return failed == 0 ? 0 : 1;
}
