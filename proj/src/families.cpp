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

#include "cbcodes/families.hpp"

#include <numeric>

#include "cbcodes/error.hpp"

namespace cbcodes {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::ExtendedRS: return "extended_rs";
    case FamilyKind::ReedMuller: return "reed_muller";
    case FamilyKind::Hermitian: return "hermitian";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "rs" || name == "extended_rs") return FamilyKind::ExtendedRS;
  if (name == "rm" || name == "reed_muller") return FamilyKind::ReedMuller;
  if (name == "hermitian") return FamilyKind::Hermitian;
  throw Error(ErrorKind::UnknownKind, "unknown family '" + std::string(name) + "'");
}

std::int64_t FamilySpec::expected_points() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), std::int64_t{1},
                         [](std::int64_t acc, int d) { return acc * d; });
}

int FamilySpec::s() const noexcept {
  return std::accumulate(degrees.begin(), degrees.end(), 0) - m - 1;
}

std::string Family::to_variety_text() const {
  std::string out = "# " + std::string(to_string(spec.kind)) + " q=" + std::to_string(spec.q_base) +
                    " m=" + std::to_string(spec.m) + "\n";
  out += "field p=" + std::to_string(field->characteristic()) +
         " e=" + std::to_string(field->degree());
  if (field->degree() > 1) {
    out += " modulus=";
    const auto& mod = field->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) out += (i ? "," : "") + std::to_string(mod[i]);
  }
  out += "\nvars m=" + std::to_string(spec.m) + "\n";
  for (const auto& f : polys) out += "poly " + f.to_string() + "\n";
  return out;
}

namespace {

// x_j^q - x_0^{q-1} x_j
Polynomial line_points(const FieldPtr& field, int m, int j, int q) {
  const auto x0 = Polynomial::variable(field, m, 0);
  const auto xj = Polynomial::variable(field, m, j);
  return xj.pow(q) - x0.pow(q - 1) * xj;
}

void require_q(int q) {
  if (!prime_power(q)) throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
}

}  // namespace

Family extended_rs(int q, int m) {
  require_q(q);
  if (m < 1) throw Error(ErrorKind::DegreeOutOfRange, "m must be >= 1");
  Family fam;
  fam.field = make_field_of_order(q);
  fam.spec = FamilySpec{FamilyKind::ExtendedRS, q, m, {}};
  for (int j = 1; j < m; ++j) {
    fam.polys.push_back(Polynomial::variable(fam.field, m, j));
    fam.spec.degrees.push_back(1);
  }
  fam.polys.push_back(line_points(fam.field, m, m, q));
  fam.spec.degrees.push_back(q);
  return fam;
}

Family reed_muller_ci(int q, int m) {
  require_q(q);
  if (m < 1) throw Error(ErrorKind::DegreeOutOfRange, "m must be >= 1");
  Family fam;
  fam.field = make_field_of_order(q);
  fam.spec = FamilySpec{FamilyKind::ReedMuller, q, m, std::vector<int>(static_cast<std::size_t>(m), q)};
  for (int j = 1; j <= m; ++j) fam.polys.push_back(line_points(fam.field, m, j, q));
  return fam;
}

Family hermitian_ci(int q) {
  require_q(q);
  const auto pe = *prime_power(q);
  Family fam;
  fam.field = make_field(pe.first, 2 * pe.second);
  fam.spec = FamilySpec{FamilyKind::Hermitian, q, 2, {q + 1, q * q - q}};
  const auto& F = *fam.field;
  const auto x0 = Polynomial::variable(fam.field, 2, 0);
  const auto x1 = Polynomial::variable(fam.field, 2, 1);
  const auto x2 = Polynomial::variable(fam.field, 2, 2);
  fam.polys.push_back(x1.pow(q + 1) - x2.pow(q) * x0 - x2 * x0.pow(q));

  Polynomial product = Polynomial::constant(fam.field, 2, 1);
  for (gf_t alpha = 0; alpha < F.order(); ++alpha) {
    if (F.add(F.pow(alpha, q), alpha) == 0) continue;
    product = product * (x2 - x0.scaled(alpha));
  }
  fam.polys.push_back(std::move(product));
  return fam;
}

std::int64_t rm_exact_distance(int q, int m, int a) {
  if (a < 0 || a > m * (q - 1))
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(a) + " outside [0, m(q-1)]");
  const int alpha = a / (q - 1);
  const int beta = a % (q - 1);
  const int exponent = m - 1 - alpha;
  if (exponent < 0) return 1;  // alpha = m forces beta = 0: q * q^-1
  std::int64_t d = q - beta;
  for (int i = 0; i < exponent; ++i) d *= q;
  return d;
}

}  // namespace cbcodes
