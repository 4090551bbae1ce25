/*
 * Copyright 2026 The specfact Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. JSON in, JSON out, deterministic bytes.
// Exit codes: 0 pass, 1 bad input, 2 numerical failure, 3 precondition
// violation, 4 resource guard.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "specfact/specfact.hpp"

namespace sf = specfact;
using sf::cd;
using sf::json;

namespace {

int exit_code_for(const sf::Error& e) {
  switch (e.category()) {
    case sf::ErrorCategory::input: return 1;
    case sf::ErrorCategory::numerical: return 2;
    case sf::ErrorCategory::precondition: return 3;
    case sf::ErrorCategory::resource: return 4;
  }
  return 2;
}

void emit_error(const sf::Error& e) {
  json diag{{"error", {{"type", e.name()}, {"message", e.what()}}}};
  std::cerr << diag.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sf::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw sf::ParseError("cannot write '" + out_path + "'");
  out << text;
}

cd parse_complex_flag(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw sf::InvalidArgument("expected 're,im', got '" + s + "'");
  try {
    return cd{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw sf::InvalidArgument("cannot parse complex value '" + s + "'");
  }
}

double default_tolerance() {
  if (const char* env = std::getenv("SPECFACT_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw sf::InvalidArgument("SPECFACT_TOL is not a number");
    }
  }
  return sf::tol::kResidual;
}

sf::LaurentMatrix load_para_hermitian(const std::string& path) {
  const sf::LaurentMatrix s = sf::laurent_matrix_from_json(sf::parse_json_text(read_file(path)));
  if (!s.is_para_hermitian())
    throw sf::NotParaHermitian("input matrix in '" + path + "' is not para-Hermitian");
  return s;
}

struct FactorCmd {
  std::string input, det_file, out, mode = "optimal";
  double tol = 0;
  double bauer_tol = 1e-10;
  int max_block = 4096;
  double boundary_tol = sf::tol::kBoundary;
};

int run_factor(const FactorCmd& cmd) {
  const sf::LaurentMatrix s = load_para_hermitian(cmd.input);
  sf::BauerOptions bauer;
  bauer.tol = cmd.bauer_tol;
  bauer.max_block = cmd.max_block;
  sf::PolyMatrix factor;
  bool warn_multiple = false;
  if (cmd.mode == "optimal") {
    factor = sf::bauer_factor(s, bauer);
  } else if (cmd.mode == "with-det") {
    if (cmd.det_file.empty()) throw sf::InvalidArgument("--mode with-det needs --det-file");
    const sf::Poly p = sf::poly_from_json(sf::parse_json_text(read_file(cmd.det_file)));
    sf::DetFactorOptions opts;
    opts.bauer = bauer;
    opts.flip.boundary_tol = cmd.boundary_tol;
    const sf::DetFactorResult r = sf::factor_with_determinant(s, p, opts);
    factor = r.factor;
    warn_multiple = r.multiple_root_warning;
  } else {
    throw sf::InvalidArgument("unknown --mode '" + cmd.mode + "'");
  }
  const sf::FactorCheckReport rep = sf::check_spectral_factor(factor, s, cmd.tol);
  json out{{"factor", sf::to_json(factor)},
           {"report", sf::to_json(rep)},
           {"zero_report", sf::to_json(sf::zero_report(factor))}};
  if (warn_multiple) out["warning"] = "determinant has repeated roots; factor is not unique";
  write_output(cmd.out, sf::canonical_dump(out));
  return rep.pass ? 0 : 2;
}

struct EnumerateCmd {
  std::string input, out_dir;
  int max_l = 20;
};

int run_enumerate(const EnumerateCmd& cmd) {
  const sf::LaurentMatrix s = load_para_hermitian(cmd.input);
  const std::vector<sf::RootPair> pairs = sf::pair_symmetric(sf::det_laurent(s));
  int l = 0;
  for (const sf::RootPair& p : pairs) l += p.multiplicity;
  if (l > cmd.max_l)
    throw sf::ResourceLimit("determinant has " + std::to_string(l) +
                            " root pairs; raise --max-L to enumerate 2^" + std::to_string(l));
  const std::vector<sf::EnumeratedFactor> factors = sf::enumerate_matrix_factors(s);
  std::filesystem::create_directories(cmd.out_dir.empty() ? "." : cmd.out_dir);
  const std::filesystem::path dir = cmd.out_dir.empty() ? "." : cmd.out_dir;
  json entries = json::array();
  for (const sf::EnumeratedFactor& ef : factors) {
    const std::string bits = ef.selection.to_string();
    const std::string name = "factor_" + (bits.empty() ? std::string("optimal") : bits) + ".json";
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw sf::ParseError("cannot write factor file");
    out << sf::canonical_dump(sf::to_json(ef.factor));
    const sf::ZeroReport zr = sf::zero_report(ef.factor);
    entries.push_back(json{{"selection", bits},
                           {"file", name},
                           {"optimal", zr.optimal()},
                           {"zero_report", sf::to_json(zr)}});
  }
  json manifest{{"L", l},
                {"count", static_cast<int>(factors.size())},
                {"entries", std::move(entries)}};
  std::ofstream mf(dir / "manifest.json", std::ios::binary);
  mf << sf::canonical_dump(manifest);
  std::cout << sf::canonical_dump(manifest);
  return 0;
}

struct FlipCmd {
  std::string input, root, out;
  double boundary_tol = sf::tol::kBoundary;
  double rank_tol = sf::tol::kRank;
};

int run_flip(const FlipCmd& cmd) {
  const sf::PolyMatrix p = sf::poly_matrix_from_json(sf::parse_json_text(read_file(cmd.input)));
  sf::FlipOptions opts;
  opts.boundary_tol = cmd.boundary_tol;
  opts.rank_tol = cmd.rank_tol;
  const sf::PolyMatrix flipped = sf::flip_zero(p, parse_complex_flag(cmd.root), opts);
  write_output(cmd.out, sf::canonical_dump(sf::to_json(flipped)));
  return 0;
}

struct VerifyCmd {
  std::string factor, matrix;
  double tol = 0;
};

int run_verify(const VerifyCmd& cmd) {
  const sf::PolyMatrix p = sf::poly_matrix_from_json(sf::parse_json_text(read_file(cmd.factor)));
  const sf::LaurentMatrix s = load_para_hermitian(cmd.matrix);
  const sf::FactorCheckReport rep = sf::check_spectral_factor(p, s, cmd.tol);
  json out{{"report", sf::to_json(rep)},
           {"positivity", sf::to_json(sf::check_positive_definite(s))},
           {"zero_report", sf::to_json(sf::zero_report(p))}};
  std::cout << sf::canonical_dump(out);
  return rep.pass ? 0 : 2;
}

struct DaubechiesCmd {
  int k = 2;
  std::string mode = "min-phase", selection, format = "json", out;
  int curves = 0;
};

int run_daubechies(const DaubechiesCmd& cmd) {
  const sf::FilterMode mode = sf::filter_mode_from_string(cmd.mode);
  sf::Poly h;
  if (mode == sf::FilterMode::selection) {
    std::vector<bool> bits;
    for (char c : cmd.selection) {
      if (c != '0' && c != '1') throw sf::InvalidArgument("--selection must be a 0/1 string");
      bits.push_back(c == '1');
    }
    const sf::FactorSelection sel(bits);
    h = sf::design_filter(cmd.k, mode, &sel);
  } else {
    h = sf::design_filter(cmd.k, mode);
  }
  if (cmd.format == "csv") {
    std::ostringstream csv;
    csv << "n,re,im\n";
    csv.precision(17);
    for (int n = 0; n <= h.degree(); ++n)
      csv << n << "," << h.coeff(n).real() << "," << h.coeff(n).imag() << "\n";
    write_output(cmd.out, csv.str());
    return 0;
  }
  if (cmd.format != "json") throw sf::InvalidArgument("--format must be json or csv");
  json out{{"K", cmd.k},
           {"mode", cmd.mode},
           {"h", sf::to_json(h)},
           {"symmetry_score", sf::symmetry_score(h)}};
  if (cmd.curves > 0) {
    json theta = json::array(), mag = json::array(), gd = json::array();
    const sf::Poly dh = h.derivative();
    for (int j = 0; j < cmd.curves; ++j) {
      const double th = 2.0 * std::numbers::pi * j / cmd.curves;
      const cd z = sf::unit_circle_point(th);
      const cd hv = h.eval(z);
      theta.push_back(th);
      mag.push_back(std::abs(hv));
      gd.push_back(std::abs(hv) > 0 ? (z * dh.eval(z) / hv).real() : 0.0);
    }
    out["curves"] = json{{"theta", std::move(theta)},
                         {"magnitude", std::move(mag)},
                         {"group_delay", std::move(gd)}};
  }
  write_output(cmd.out, sf::canonical_dump(out));
  return 0;
}

struct NonuniqueCmd {
  std::string a = "0.5,0";
};

int run_nonunique(const NonuniqueCmd& cmd) {
  const sf::NonuniquenessFixture fx = sf::nonuniqueness_fixture(parse_complex_flag(cmd.a));
  json out{{"a", json::array({parse_complex_flag(cmd.a).real(), parse_complex_flag(cmd.a).imag()})},
           {"p_plus", sf::to_json(fx.p_plus)},
           {"r_plus", sf::to_json(fx.r_plus)},
           {"s", sf::to_json(fx.s)},
           {"residual_p", fx.residual_p},
           {"residual_r", fx.residual_r},
           {"dets_match", fx.dets_match},
           {"equivalent", fx.equivalent}};
  std::cout << sf::canonical_dump(out);
  return fx.passes() ? 0 : 2;
}

struct GenCmd {
  unsigned long seed = 1;
  int m = 2, n = 1;
  std::string kind = "laurent", out;
};

// Hidden helper for CI: a random planted-root instance (S = Q tilde(Q)).
int run_gen(const GenCmd& cmd) {
  if (cmd.m < 1 || cmd.n < 0) throw sf::InvalidArgument("bad --m/--N");
  std::mt19937_64 rng(cmd.seed);
  std::uniform_real_distribution<double> mod(0.1, 0.9);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_unitary = [&](int dim) {
    sf::CMatrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = cd{gauss(rng), gauss(rng)};
    // Gram-Schmidt columns
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < j; ++k) {
        cd dot{};
        for (int i = 0; i < dim; ++i) dot += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < dim; ++i) g(i, j) -= dot * g(i, k);
      }
      double nn = 0;
      for (int i = 0; i < dim; ++i) nn += std::norm(g(i, j));
      nn = std::sqrt(nn);
      for (int i = 0; i < dim; ++i) g(i, j) /= nn;
    }
    return g;
  };
  sf::PolyMatrix q = sf::PolyMatrix::constant(random_unitary(cmd.m));
  for (int stage = 0; stage < cmd.n; ++stage) {
    std::vector<sf::CMatrix> lin(2, sf::CMatrix(cmd.m, cmd.m));
    for (int i = 0; i < cmd.m; ++i) {
      lin[0](i, i) = -std::polar(mod(rng), arg(rng));
      lin[1](i, i) = 1.0;
    }
    q = q * sf::PolyMatrix(cmd.m, std::move(lin)) * sf::PolyMatrix::constant(random_unitary(cmd.m));
  }
  if (cmd.kind == "factor") {
    write_output(cmd.out, sf::canonical_dump(sf::to_json(q)));
    return 0;
  }
  if (cmd.kind != "laurent") throw sf::InvalidArgument("--kind must be laurent or factor");
  write_output(cmd.out, sf::canonical_dump(sf::to_json(sf::mul_factor(q))));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral factorization of Laurent polynomial matrices"};
  app.require_subcommand(1);

  FactorCmd fc;
  fc.tol = -1;
  CLI::App* factor = app.add_subcommand("factor", "compute a spectral factor");
  factor->add_option("input", fc.input, "para-Hermitian matrix JSON")->required();
  factor->add_option("--mode", fc.mode, "optimal | with-det");
  factor->add_option("--det-file", fc.det_file, "scalar determinant factor JSON");
  factor->add_option("--tol", fc.tol, "verification tolerance");
  factor->add_option("--bauer-tol", fc.bauer_tol, "iteration stop tolerance");
  factor->add_option("--max-block", fc.max_block, "iteration block budget");
  factor->add_option("--boundary-tol", fc.boundary_tol, "circle-distance guard for flips");
  factor->add_option("--out", fc.out, "output file (default stdout)");

  EnumerateCmd ec;
  CLI::App* enumerate = app.add_subcommand("enumerate", "write all 2^L spectral factors");
  enumerate->add_option("input", ec.input, "para-Hermitian matrix JSON")->required();
  enumerate->add_option("--max-L", ec.max_l, "refuse enumerations beyond 2^L");
  enumerate->add_option("--out-dir", ec.out_dir, "output directory")->required();

  FlipCmd flc;
  CLI::App* flip = app.add_subcommand("flip", "move one determinant zero across the circle");
  flip->add_option("input", flc.input, "factor JSON")->required();
  flip->add_option("--root", flc.root, "determinant zero as re,im")->required();
  flip->add_option("--boundary-tol", flc.boundary_tol, "circle-distance guard");
  flip->add_option("--rank-tol", flc.rank_tol, "rank test threshold");
  flip->add_option("--out", flc.out, "output file (default stdout)");

  VerifyCmd vc;
  vc.tol = -1;
  CLI::App* verify = app.add_subcommand("verify", "check P tilde(P) = S");
  verify->add_option("factor", vc.factor, "factor JSON")->required();
  verify->add_option("matrix", vc.matrix, "matrix JSON")->required();
  verify->add_option("--tol", vc.tol, "verification tolerance");

  DaubechiesCmd dc;
  CLI::App* daub = app.add_subcommand("daubechies", "design an order-K orthonormal lowpass filter");
  daub->add_option("--K", dc.k, "filter order (1..12)")->required();
  daub->add_option("--mode", dc.mode, "min-phase | mid-phase | balanced | selection");
  daub->add_option("--selection", dc.selection, "0/1 string for --mode selection");
  daub->add_option("--format", dc.format, "json | csv");
  daub->add_option("--curves", dc.curves, "sample count for magnitude/group-delay curves");
  daub->add_option("--out", dc.out, "output file (default stdout)");

  NonuniqueCmd nc;
  CLI::App* nonunique =
      app.add_subcommand("example-nonunique", "two inequivalent factors with equal determinant");
  nonunique->add_option("--a", nc.a, "inner zero as re,im (|a| < 1)");

  GenCmd gc;
  CLI::App* gen = app.add_subcommand("gen", "random planted-root test instance");
  gen->add_option("--seed", gc.seed, "RNG seed");
  gen->add_option("--m", gc.m, "dimension");
  gen->add_option("--N", gc.n, "degree");
  gen->add_option("--kind", gc.kind, "laurent | factor");
  gen->add_option("--out", gc.out, "output file (default stdout)");
  gen->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    const double tol = default_tolerance();
    if (fc.tol < 0) fc.tol = tol;
    if (vc.tol < 0) vc.tol = tol;
    if (factor->parsed()) return run_factor(fc);
    if (enumerate->parsed()) return run_enumerate(ec);
    if (flip->parsed()) return run_flip(flc);
    if (verify->parsed()) return run_verify(vc);
    if (daub->parsed()) return run_daubechies(dc);
    if (nonunique->parsed()) return run_nonunique(nc);
    if (gen->parsed()) return run_gen(gc);
  } catch (const sf::Error& e) {
    emit_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << R"({"error": {"type": "Internal", "message": ")" << e.what() << R"("}})" << "\n";
    return 2;
  }
  return 0;
}
