// End-to-end checks of the command-line tool: exit-code contract, JSON
// schema round trips, and byte-stable output.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "specfact/json_io.hpp"
#include "specfact/verify.hpp"
#include "specfact/wavelet.hpp"
#include "test_support.hpp"

using namespace specfact;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("specfact_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

RunResult run_cli(const TempDir& dir, const std::string& args, const std::string& env = "") {
  const fs::path out = dir.path() / "stdout.txt";
  const fs::path err = dir.path() / "stderr.txt";
  const std::string cmd = env + std::string(SPECFACT_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("canonical json round trips byte-identically") {
  auto g = sft::rng(81);
  const PolyMatrix q = sft::planted_factor(g, 2, 2, sft::distinct_roots(g, 4));
  const std::string factor_text = canonical_dump(to_json(q));
  CHECK(canonical_dump(to_json(poly_matrix_from_json(parse_json_text(factor_text)))) ==
        factor_text);

  const LaurentMatrix s = mul_factor(q);
  const std::string matrix_text = canonical_dump(to_json(s));
  CHECK(canonical_dump(to_json(laurent_matrix_from_json(parse_json_text(matrix_text)))) ==
        matrix_text);
}

TEST_CASE("json parsing rejects malformed inputs") {
  CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
  CHECK_THROWS_AS(poly_matrix_from_json(json::parse(R"({"m":1,"N":0,"kind":"laurent","coeffs":{"0":[[[1,0]]]}})")),
                  ParseError);
  CHECK_THROWS_AS(poly_matrix_from_json(json::parse(R"({"m":2,"N":0,"kind":"poly","coeffs":{"0":[[[1,0]]]}})")),
                  ParseError);
  CHECK_THROWS_AS(laurent_matrix_from_json(json::parse(R"({"m":1,"N":1,"kind":"laurent","coeffs":{"0":[[[1,0]]]}})")),
                  ParseError);
}

TEST_CASE("cli: factor identity, corrupted input, indefinite input") {
  TempDir dir;
  const fs::path input = dir.path() / "s.json";
  write_file(input, canonical_dump(to_json(LaurentMatrix::identity(2))));
  const RunResult ok = run_cli(dir, "factor " + input.string());
  CHECK(ok.exit_code == 0);
  const json out = parse_json_text(ok.out);
  CHECK(out["report"]["pass"].get<bool>());
  CHECK(out["zero_report"]["optimal"].get<bool>());
  const PolyMatrix p = poly_matrix_from_json(out["factor"]);
  CHECK(p.degree() == 0);

  write_file(input, "{broken");
  CHECK(run_cli(dir, "factor " + input.string()).exit_code == 1);

  // para-Hermitian but indefinite: s(theta) = 2 cos(theta)
  std::vector<CMatrix> c(3, CMatrix(1, 1));
  c[0](0, 0) = 1.0;
  c[2](0, 0) = 1.0;
  write_file(input, canonical_dump(to_json(LaurentMatrix(1, 1, std::move(c)))));
  const RunResult pd = run_cli(dir, "factor " + input.string());
  CHECK(pd.exit_code == 3);
  CHECK(pd.err.find("NotPositiveDefinite") != std::string::npos);
}

TEST_CASE("cli: factor with preassigned determinant") {
  TempDir dir;
  const NonuniquenessFixture fx = nonuniqueness_fixture(cd{0.5});
  const fs::path input = dir.path() / "s.json";
  const fs::path det = dir.path() / "p.json";
  write_file(input, canonical_dump(to_json(fx.s)));
  // mixed factor 0.5(z - 1/2)(z - 2) of det S = s^2
  write_file(det, canonical_dump(to_json(Poly(std::vector<cd>{cd{0.5}, cd{-1.25}, cd{0.5}}))));
  const RunResult r =
      run_cli(dir, "factor " + input.string() + " --mode with-det --det-file " + det.string());
  CHECK(r.exit_code == 0);
  const json out = parse_json_text(r.out);
  CHECK(out["report"]["pass"].get<bool>());
  CHECK(out.contains("warning"));  // repeated determinant roots
}

TEST_CASE("cli: enumerate planted L=2 and the max-L guard") {
  TempDir dir;
  auto g = sft::rng(82);
  const PolyMatrix q = sft::planted_factor(g, 2, 1, sft::distinct_roots(g, 2));
  const fs::path input = dir.path() / "s.json";
  write_file(input, canonical_dump(to_json(mul_factor(q))));
  const fs::path outdir = dir.path() / "factors";
  const RunResult r =
      run_cli(dir, "enumerate " + input.string() + " --out-dir " + outdir.string());
  CHECK(r.exit_code == 0);
  const json manifest = parse_json_text(slurp(outdir / "manifest.json"));
  CHECK(manifest["L"].get<int>() == 2);
  CHECK(manifest["count"].get<int>() == 4);
  int optimal = 0;
  for (const json& e : manifest["entries"]) {
    CHECK(fs::exists(outdir / e["file"].get<std::string>()));
    if (e["optimal"].get<bool>()) ++optimal;
  }
  CHECK(optimal == 1);

  const RunResult guard =
      run_cli(dir, "enumerate " + input.string() + " --out-dir " + outdir.string() + " --max-L 1");
  CHECK(guard.exit_code == 4);
}

TEST_CASE("cli: flip moves a zero, rejects a non-root") {
  TempDir dir;
  const NonuniquenessFixture fx = nonuniqueness_fixture(cd{0.5});
  const fs::path input = dir.path() / "p.json";
  write_file(input, canonical_dump(to_json(fx.p_plus)));
  const RunResult r = run_cli(dir, "flip " + input.string() + " --root 2.0,0");
  CHECK(r.exit_code == 0);
  const PolyMatrix flipped = poly_matrix_from_json(parse_json_text(r.out));
  CHECK(flipped.degree() == 1);

  const RunResult bad = run_cli(dir, "flip " + input.string() + " --root 3.0,0");
  CHECK(bad.exit_code == 3);
  CHECK(bad.err.find("NotARoot") != std::string::npos);
}

TEST_CASE("cli: verify pass and fail") {
  TempDir dir;
  const NonuniquenessFixture fx = nonuniqueness_fixture(cd{0.3, 0.4});
  const fs::path factor = dir.path() / "p.json";
  const fs::path matrix = dir.path() / "s.json";
  write_file(factor, canonical_dump(to_json(fx.p_plus)));
  write_file(matrix, canonical_dump(to_json(fx.s)));
  const RunResult good = run_cli(dir, "verify " + factor.string() + " " + matrix.string());
  CHECK(good.exit_code == 0);
  CHECK(parse_json_text(good.out)["report"]["pass"].get<bool>());

  write_file(matrix, canonical_dump(to_json(LaurentMatrix::identity(2))));
  const RunResult bad = run_cli(dir, "verify " + factor.string() + " " + matrix.string());
  CHECK(bad.exit_code == 2);
  CHECK_FALSE(parse_json_text(bad.out)["report"]["pass"].get<bool>());
}

TEST_CASE("cli: daubechies json, csv, and curves") {
  TempDir dir;
  const RunResult haar = run_cli(dir, "daubechies --K 1");
  CHECK(haar.exit_code == 0);
  const json out = parse_json_text(haar.out);
  const Poly h = poly_from_json(out["h"]);
  CHECK(h.degree() == 1);
  CHECK(std::abs(h.coeff(0) - cd{1.0 / std::sqrt(2.0)}) < 1e-12);

  const RunResult csv = run_cli(dir, "daubechies --K 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("n,re,im\n", 0) == 0);

  const RunResult curves = run_cli(dir, "daubechies --K 2 --curves 16");
  CHECK(curves.exit_code == 0);
  CHECK(parse_json_text(curves.out)["curves"]["theta"].size() == 16);

  CHECK(run_cli(dir, "daubechies --K 0").exit_code == 1);
}

TEST_CASE("cli: the nonuniqueness example emits two inequivalent factors") {
  TempDir dir;
  const RunResult r = run_cli(dir, "example-nonunique --a 0.5,0");
  CHECK(r.exit_code == 0);
  const json out = parse_json_text(r.out);
  CHECK(out["dets_match"].get<bool>());
  CHECK_FALSE(out["equivalent"].get<bool>());
}

TEST_CASE("cli: SPECFACT_TOL environment override") {
  TempDir dir;
  const NonuniquenessFixture fx = nonuniqueness_fixture(cd{0.5});
  // perturb the factor so it fails the default 1e-8 tolerance
  CMatrix b0 = fx.p_plus.coeff(0), b1 = fx.p_plus.coeff(1);
  b0(0, 1) += 1e-5;
  const fs::path factor = dir.path() / "p.json";
  const fs::path matrix = dir.path() / "s.json";
  write_file(factor, canonical_dump(to_json(PolyMatrix(2, {b0, b1}))));
  write_file(matrix, canonical_dump(to_json(fx.s)));
  CHECK(run_cli(dir, "verify " + factor.string() + " " + matrix.string()).exit_code == 2);
  const RunResult loose =
      run_cli(dir, "verify " + factor.string() + " " + matrix.string(), "SPECFACT_TOL=1e-3 ");
  CHECK(loose.exit_code == 0);
  CHECK(parse_json_text(loose.out)["report"]["tolerance"].get<double>() == 1e-3);
}

TEST_CASE("cli: enumerating the identity emits the single optimal factor") {
  TempDir dir;
  const fs::path input = dir.path() / "s.json";
  write_file(input, canonical_dump(to_json(LaurentMatrix::identity(2))));
  const fs::path outdir = dir.path() / "only";
  const RunResult r = run_cli(dir, "enumerate " + input.string() + " --out-dir " + outdir.string());
  CHECK(r.exit_code == 0);
  const json manifest = parse_json_text(slurp(outdir / "manifest.json"));
  CHECK(manifest["count"].get<int>() == 1);
  CHECK(fs::exists(outdir / "factor_optimal.json"));
}

TEST_CASE("cli: daubechies balanced mode") {
  TempDir dir;
  const RunResult r = run_cli(dir, "daubechies --K 4 --mode balanced");
  CHECK(r.exit_code == 0);
  const json out = parse_json_text(r.out);
  CHECK(poly_from_json(out["h"]).degree() == 7);
}

TEST_CASE("cli: deterministic bytes for identical inputs") {
  TempDir dir;
  const RunResult g1 = run_cli(dir, "gen --seed 7 --m 2 --N 1");
  const RunResult g2 = run_cli(dir, "gen --seed 7 --m 2 --N 1");
  CHECK(g1.exit_code == 0);
  CHECK(g1.out == g2.out);

  const fs::path input = dir.path() / "s.json";
  write_file(input, g1.out);
  const RunResult f1 = run_cli(dir, "factor " + input.string());
  const RunResult f2 = run_cli(dir, "factor " + input.string());
  CHECK(f1.exit_code == 0);
  CHECK(f1.out == f2.out);
}
