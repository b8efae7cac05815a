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

#include "cbcodes/evalcode.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "cbcodes/error.hpp"

namespace cbcodes {

EvalMatrix evaluation_matrix(const GaloisField& field, int m, std::span<const Coords> reps, int a) {
  EvalMatrix out;
  out.degree = a;
  out.monomials = monomials_of_degree(m, a);
  const auto rows = static_cast<Index>(reps.size());
  const auto cols = static_cast<Index>(out.monomials.size());
  out.entries.resize(rows, cols);
  if (a < 0) return out;
  const auto vars = static_cast<std::size_t>(m) + 1;
  std::vector<gf_t> powers(vars * (static_cast<std::size_t>(a) + 1));
  for (Index i = 0; i < rows; ++i) {
    const auto& pt = reps[static_cast<std::size_t>(i)];
    if (pt.size() != vars) throw Error(ErrorKind::FieldMismatch, "point has wrong dimension");
    for (std::size_t v = 0; v < vars; ++v) {
      gf_t acc = 1;
      for (int e = 0; e <= a; ++e) {
        powers[v * (static_cast<std::size_t>(a) + 1) + static_cast<std::size_t>(e)] = acc;
        acc = field.mul(acc, pt[v]);
      }
    }
    for (Index j = 0; j < cols; ++j) {
      const auto& exps = out.monomials[static_cast<std::size_t>(j)].exponents;
      gf_t value = 1;
      for (std::size_t v = 0; v < vars && value != 0; ++v)
        value = field.mul(value, powers[v * (static_cast<std::size_t>(a) + 1) +
                                        static_cast<std::size_t>(exps[v])]);
      out.entries(i, j) = value;
    }
  }
  return out;
}

EvalMatrix evaluation_matrix(const PointSet& gamma, int a) {
  std::vector<Coords> reps;
  reps.reserve(gamma.size());
  for (const auto& pt : gamma.points) reps.push_back(pt.coords);
  return evaluation_matrix(*gamma.field, gamma.m, reps, a);
}

RankKernel rank_and_kernel(const GaloisField& field, const EvalMatrix& m) {
  RankKernel out;
  out.kernel = kernel_basis(field, m.entries);
  out.rank = m.entries.cols() - out.kernel.rows();
  return out;
}

Polynomial choose_f0(const PointSet& gamma, int a, std::uint64_t seed) {
  if (a < 0) throw Error(ErrorKind::DegreeOutOfRange, "normaliser degree must be >= 0");
  const auto& F = *gamma.field;
  const bool affine = std::all_of(gamma.points.begin(), gamma.points.end(),
                                  [](const ProjPoint& p) { return p.coords[0] != 0; });
  const auto monos = monomials_of_degree(gamma.m, a);
  if (affine) return Polynomial::monomial(gamma.field, gamma.m, monos.front());

  const auto M = evaluation_matrix(gamma, a);
  std::mt19937_64 rng(seed);
  std::vector<gf_t> coeffs(monos.size());
  for (int trial = 0; trial < kNormalizerTrials; ++trial) {
    for (auto& c : coeffs) c = static_cast<gf_t>(rng() % F.order());
    bool nonvanishing = true;
    for (Index i = 0; i < M.entries.rows() && nonvanishing; ++i) {
      gf_t v = 0;
      for (Index j = 0; j < M.entries.cols(); ++j)
        v = F.add(v, F.mul(M.entries(i, j), coeffs[static_cast<std::size_t>(j)]));
      nonvanishing = v != 0;
    }
    if (!nonvanishing) continue;
    Polynomial::Terms terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (coeffs[j] != 0) terms.emplace(monos[j], coeffs[j]);
    return Polynomial(gamma.field, gamma.m, std::move(terms));
  }
  throw Error(ErrorKind::NoNormalizerFound,
              "no degree-" + std::to_string(a) + " form without zeros on the point set after " +
                  std::to_string(kNormalizerTrials) + " trials; pass f0 explicitly");
}

EvalCode code_from_evaluation_matrix(const PointSet& gamma, const EvalMatrix& m) {
  EvalCode code;
  code.gamma = gamma;
  code.degree = m.degree;
  code.n = static_cast<Index>(gamma.size());
  if (m.entries.cols() == 0 || m.entries.rows() == 0) {
    code.gen.resize(0, code.n);
    return code;
  }
  Matrix transposed = m.entries.transpose();
  code.gen = row_space_basis(*gamma.field, transposed);
  code.k = code.gen.rows();
  return code;
}

EvalCode build_code(const PointSet& gamma, int a, const std::optional<Polynomial>& f0) {
  auto m = evaluation_matrix(gamma, a);
  if (f0) {
    const auto& F = *gamma.field;
    for (Index i = 0; i < m.entries.rows(); ++i) {
      const gf_t v = f0->evaluate(gamma.points[static_cast<std::size_t>(i)].coords);
      if (v == 0)
        throw Error(ErrorKind::NormalizerVanishes, "f0 vanishes at point " + std::to_string(i));
      const gf_t s = F.inv(v);
      for (Index j = 0; j < m.entries.cols(); ++j) m.entries(i, j) = F.mul(m.entries(i, j), s);
    }
  }
  auto code = code_from_evaluation_matrix(gamma, m);
  code.f0 = f0;
  return code;
}

std::string DistanceResult::to_string() const {
  return "d=" + std::to_string(d) + " exact=" + (exact ? "true" : "false") +
         " scanned=" + std::to_string(codewords_scanned);
}

std::uint64_t projective_message_count(const EvalCode& code) {
  const std::uint64_t q = code.field()->order();
  std::uint64_t total = 0;
  for (Index i = 0; i < code.k; ++i) {
    if (total > (std::numeric_limits<std::uint64_t>::max() - 1) / q)
      return std::numeric_limits<std::uint64_t>::max();
    total = total * q + 1;
  }
  return total;
}

namespace {

// Walks projective message classes [begin, end) in a fixed order: block L
// holds messages whose first nonzero entry (equal to 1) is at row L, with
// the trailing entries read as a base-q number.
class MessageWalker {
 public:
  MessageWalker(const EvalCode& code, std::vector<std::uint64_t>& weights)
      : F_(*code.field()), code_(code), q_(code.field()->order()), weights_(weights) {
    const auto k = static_cast<std::size_t>(code.k);
    const auto n = static_cast<std::size_t>(code.n);
    scaled_.resize(k * q_ * n);
    for (std::size_t i = 0; i < k; ++i)
      for (gf_t v = 0; v < q_; ++v)
        for (std::size_t c = 0; c < n; ++c)
          scaled_[(i * q_ + v) * n + c] = F_.mul(v, code.gen(static_cast<Index>(i), static_cast<Index>(c)));
  }

  void run(std::uint64_t begin, std::uint64_t end) {
    const auto k = static_cast<std::size_t>(code_.k);
    const auto n = static_cast<std::size_t>(code_.n);
    std::uint64_t block_start = 0;
    for (std::size_t lead = 0; lead < k && begin < end; ++lead) {
      const std::size_t free = k - 1 - lead;
      std::uint64_t block = 1;
      for (std::size_t i = 0; i < free; ++i) block *= q_;
      const std::uint64_t block_end = block_start + block;
      if (begin >= block_end) {
        block_start = block_end;
        continue;
      }
      // Decode the starting offset into digits.
      std::vector<gf_t> msg(k, 0);
      msg[lead] = 1;
      std::uint64_t offset = begin - block_start;
      for (std::size_t pos = k; pos-- > lead + 1;) {
        msg[pos] = static_cast<gf_t>(offset % q_);
        offset /= q_;
      }
      std::vector<gf_t> word(n, 0);
      for (std::size_t i = lead; i < k; ++i)
        for (std::size_t c = 0; c < n; ++c) word[c] = F_.add(word[c], row(i, msg[i])[c]);

      const std::uint64_t stop = std::min(end, block_end);
      for (std::uint64_t idx = begin; idx < stop; ++idx) {
        std::size_t w = 0;
        for (gf_t x : word) w += x != 0;
        ++weights_[w];
        if (idx + 1 == stop) break;
        // Odometer step on positions lead+1..k-1.
        for (std::size_t pos = k; pos-- > lead + 1;) {
          const gf_t old = msg[pos];
          const gf_t next = old + 1 == q_ ? 0 : old + 1;
          msg[pos] = next;
          const gf_t* from = row(pos, old);
          const gf_t* to = row(pos, next);
          for (std::size_t c = 0; c < n; ++c) word[c] = F_.add(F_.sub(word[c], from[c]), to[c]);
          if (next != 0) break;
        }
      }
      begin = stop;
      block_start = block_end;
    }
  }

 private:
  const gf_t* row(std::size_t i, gf_t v) const {
    return &scaled_[(i * q_ + v) * static_cast<std::size_t>(code_.n)];
  }

  const GaloisField& F_;
  const EvalCode& code_;
  gf_t q_;
  std::vector<gf_t> scaled_;
  std::vector<std::uint64_t>& weights_;
};

// Weight histogram over projective message classes.
std::vector<std::uint64_t> projective_weights(const EvalCode& code, std::uint64_t cap,
                                              unsigned threads) {
  const std::uint64_t total = projective_message_count(code);
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, std::to_string(total) + " message classes exceed cap " +
                                            std::to_string(cap));
  const auto n = static_cast<std::size_t>(code.n);
  threads = std::max(1U, threads);
  if (total < 4096) threads = 1;
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 1, 0));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = total * t / threads;
    const std::uint64_t end = total * (t + 1) / threads;
    auto work = [&code, &partial, t, begin, end] {
      MessageWalker walker(code, partial[t]);
      walker.run(begin, end);
    };
    if (threads == 1)
      work();
    else
      pool.emplace_back(work);
  }
  for (auto& th : pool) th.join();
  std::vector<std::uint64_t> sum(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t w = 0; w <= n; ++w) sum[w] += p[w];
  return sum;
}

}  // namespace

DistanceResult min_distance(const EvalCode& code, std::uint64_t cap, unsigned threads) {
  DistanceResult out;
  if (code.k == 0) return out;
  const auto weights = projective_weights(code, cap, threads);
  out.codewords_scanned = projective_message_count(code);
  for (std::size_t w = 1; w < weights.size(); ++w) {
    if (weights[w] != 0) {
      out.d = static_cast<std::int64_t>(w);
      break;
    }
  }
  return out;
}

std::vector<std::uint64_t> weight_distribution(const EvalCode& code, std::uint64_t cap,
                                               unsigned threads) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n) + 1, 0);
  counts[0] = 1;
  if (code.k == 0) return counts;
  const auto proj = projective_weights(code, cap, threads);
  const std::uint64_t units = code.field()->order() - 1;
  for (std::size_t w = 1; w < proj.size(); ++w) counts[w] = proj[w] * units;
  return counts;
}

}  // namespace cbcodes
