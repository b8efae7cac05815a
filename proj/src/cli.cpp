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

#include "cbcodes/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cbcodes/cbtheory.hpp"
#include "cbcodes/cohom.hpp"
#include "cbcodes/error.hpp"
#include "cbcodes/families.hpp"

namespace cbcodes {

namespace {

[[noreturn]] void syntax(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t to_int(std::string_view s, std::size_t line_no) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    syntax(line_no, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

// Splits `key=value` tokens of a header line.
std::vector<std::pair<std::string, std::string>> key_values(std::string_view rest,
                                                            std::size_t line_no) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(rest)};
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) syntax(line_no, "expected key=value, got '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

}  // namespace

VarietyFile parse_variety(std::string_view text) {
  VarietyFile vf;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? "" : trim(line.substr(sp));

    if (keyword == "field") {
      if (vf.field) syntax(line_no, "duplicate field line");
      std::optional<std::int64_t> p, e;
      std::optional<std::vector<int>> modulus;
      for (const auto& [k, v] : key_values(rest, line_no)) {
        if (k == "p") {
          p = to_int(v, line_no);
        } else if (k == "e") {
          e = to_int(v, line_no);
        } else if (k == "modulus") {
          modulus.emplace();
          std::string_view list = v;
          while (!list.empty()) {
            const auto comma = list.find(',');
            modulus->push_back(static_cast<int>(to_int(list.substr(0, comma), line_no)));
            list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
          }
        } else {
          syntax(line_no, "unknown field attribute '" + k + "'");
        }
      }
      if (!p || !e) syntax(line_no, "field needs p= and e=");
      if (*p > GaloisField::kMaxOrder || *e > 64) throw Error(ErrorKind::FieldTooLarge, "field too large");
      vf.field = make_field(static_cast<int>(*p), static_cast<int>(*e), modulus);
    } else if (keyword == "vars") {
      if (vf.m >= 0) syntax(line_no, "duplicate vars line");
      for (const auto& [k, v] : key_values(rest, line_no)) {
        if (k != "m") syntax(line_no, "unknown vars attribute '" + k + "'");
        vf.m = static_cast<int>(to_int(v, line_no));
      }
      if (vf.m < 1 || vf.m > 16) syntax(line_no, "vars needs 1 <= m <= 16");
    } else if (keyword == "poly") {
      if (!vf.field || vf.m < 0) syntax(line_no, "poly before field and vars");
      auto f = parse_polynomial(rest, vf.m, vf.field);
      if (!f.is_homogeneous())
        throw Error(ErrorKind::NonHomogeneous, "line " + std::to_string(line_no) + ": " +
                                                   f.to_string() + " is not homogeneous");
      vf.polys.push_back(std::move(f));
    } else {
      syntax(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!vf.field) throw Error(ErrorKind::SyntaxError, "missing field line");
  if (vf.m < 0) throw Error(ErrorKind::SyntaxError, "missing vars line");
  return vf;
}

VarietyFile read_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_variety(buf.str());
}

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownVariable:
    case ErrorKind::NotPrime:
    case ErrorKind::ReducibleModulus:
    case ErrorKind::FieldTooLarge:
    case ErrorKind::NonHomogeneous:
    case ErrorKind::UnknownKind:
      return kExitParse;
    case ErrorKind::CapExceeded:
      return kExitCap;
    default:
      return kExitValidation;
  }
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  unsigned threads = 1;
  std::string file;
  bool require_ci = false;
  int degree = 0;
  std::uint64_t cap = kDefaultDistanceCap;
  bool emit_matrix = false;
  bool no_range_check = false;
  std::string degrees;
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 0;
  std::string kind;
  int q = 0;
  int m = 1;
  std::string out_path;
};

int cmd_points(const Options& opt, std::ostream& out) {
  const auto vf = read_variety_file(opt.file);
  const auto pts = variety_points(vf.polys, vf.m, vf.field);
  for (const auto& pt : pts.points) {
    for (std::size_t i = 0; i < pt.coords.size(); ++i) out << (i ? " " : "") << pt.coords[i];
    out << "\n";
  }
  if (vf.polys.size() != static_cast<std::size_t>(vf.m)) {
    if (opt.require_ci)
      throw Error(ErrorKind::WrongCount, std::to_string(vf.polys.size()) + " polynomials in P^" +
                                             std::to_string(vf.m));
    out << "points=" << pts.size() << " validation=skipped\n";
    return kExitOk;
  }
  const auto v = validate_ci(vf.polys, pts);
  out << v.to_string() << "\n";
  return opt.require_ci && !v.ok() ? kExitValidation : kExitOk;
}

CISetup load_setup(const std::string& path) {
  auto vf = read_variety_file(path);
  return make_ci_setup(std::move(vf.polys), vf.m, vf.field);
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const auto setup = load_setup(opt.file);
  const auto report = verify_main_theorem(setup, opt.degree, opt.cap, opt.threads, !opt.no_range_check);
  out << report.to_string() << "\n" << report.distance.to_string() << "\n";
  if (opt.emit_matrix) {
    const auto code = build_code(setup.gamma, opt.degree);
    for (Index i = 0; i < code.gen.rows(); ++i) {
      for (Index j = 0; j < code.gen.cols(); ++j) out << (j ? " " : "") << code.gen(i, j);
      out << "\n";
    }
  }
  return kExitOk;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  const auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
      throw Error(ErrorKind::SyntaxError, "bad degree range '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) {
    const int a = num(text);
    return {a, a};
  }
  const int lo = num(std::string_view(text).substr(0, dots));
  const int hi = num(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw Error(ErrorKind::SyntaxError, "empty degree range '" + text + "'");
  return {lo, hi};
}

int cmd_cb(const Options& opt, std::ostream& out) {
  const auto [lo, hi] = parse_degree_range(opt.degrees);
  const auto setup = load_setup(opt.file);
  out << "s=" << setup.s << " points=" << setup.size() << " seed=" << opt.seed << "\n";
  bool clean = true;
  for (int a = lo; a <= hi; ++a) {
    const auto report = verify_cb_all(setup, a, opt.budget, opt.seed, opt.threads);
    out << report.to_string();
    clean = clean && report.violations.empty();
  }
  return clean ? kExitOk : kExitValidation;
}

int cmd_hilbert(const Options& opt, std::ostream& out) {
  auto vf = read_variety_file(opt.file);
  const auto pts = variety_points(vf.polys, vf.m, vf.field);
  const auto profile = cohomology_profile(pts, static_cast<int>(pts.size()));
  out << profile.to_string();
  std::optional<CISetup> setup;
  if (vf.polys.size() == static_cast<std::size_t>(vf.m)) {
    try {
      setup = make_ci_setup(std::move(vf.polys), vf.m, vf.field);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSplit) throw;
    }
  }
  if (setup) {
    out << "s=" << setup->s << "\n";
    out << "symmetry=" << (verify_symmetry(*setup) ? "pass" : "fail") << "\n";
  } else {
    out << "symmetry=skipped\n";
  }
  if (pts.size() <= 64)
    out << "cb_scheme=" << flag(is_cb_scheme(pts)) << "\n";
  else
    out << "cb_scheme=skipped\n";
  return kExitOk;
}

int cmd_family(const Options& opt, std::ostream& out) {
  const auto kind = parse_family_kind(opt.kind);
  Family fam = kind == FamilyKind::ExtendedRS   ? extended_rs(opt.q, opt.m)
               : kind == FamilyKind::ReedMuller ? reed_muller_ci(opt.q, opt.m)
                                                : hermitian_ci(opt.q);
  out << "# family=" << to_string(fam.spec.kind) << " q=" << fam.spec.q_base << " m=" << fam.spec.m
      << " field=F_" << fam.field->order() << " degrees=" << join(fam.spec.degrees)
      << " points=" << fam.spec.expected_points() << " s=" << fam.spec.s() << "\n";
  const auto text = fam.to_variety_text();
  if (opt.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(opt.out_path);
    if (!f) throw Error(ErrorKind::SyntaxError, "cannot write " + opt.out_path);
    f << text;
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation codes on complete intersections"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Worker threads for distance and subset scans")
      ->check(CLI::Range(1U, 256U));
  app.fallthrough();

  auto* points = app.add_subcommand("points", "List the rational points and validate the CI");
  points->add_option("file", opt.file, "Variety file")->required();
  points->add_flag("--require-ci", opt.require_ci, "Fail unless the input is a split smooth CI");

  auto* analyze = app.add_subcommand("analyze", "Parameters of C(G)_a against the distance bound");
  analyze->add_option("file", opt.file, "Variety file")->required();
  analyze->add_option("--degree,-a", opt.degree, "Degree a")->required();
  analyze->add_option("--cap", opt.cap, "Maximum number of message classes to scan");
  analyze->add_flag("--emit-matrix", opt.emit_matrix, "Print the generator matrix");
  analyze->add_flag("--no-range-check", opt.no_range_check, "Allow a outside [1, s]");

  auto* cb = app.add_subcommand("cb", "Check the residual identity over subset splits");
  cb->add_option("file", opt.file, "Variety file")->required();
  cb->add_option("--degrees", opt.degrees, "Degree or range a1..a2")->required();
  cb->add_option("--budget", opt.budget, "Exhaustive when 2^|G| <= budget, else sample size");
  cb->add_option("--seed", opt.seed, "Sampling seed");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, h0/h1 table and sigma");
  hilbert->add_option("file", opt.file, "Variety file")->required();

  auto* family = app.add_subcommand("family", "Write the variety file of a named family");
  family->add_option("kind", opt.kind, "rs | rm | hermitian")->required();
  family->add_option("--q", opt.q, "Field size (base field for hermitian)")->required();
  family->add_option("--m", opt.m, "Ambient dimension");
  family->add_option("--out", opt.out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*points) return cmd_points(opt, out);
    if (*analyze) return cmd_analyze(opt, out);
    if (*cb) return cmd_cb(opt, out);
    if (*hilbert) return cmd_hilbert(opt, out);
    if (*family) return cmd_family(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitParse;
}

}  // namespace cbcodes
