#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "specfact/rootfind.hpp"
#include "specfact/scalar_fejer.hpp"
#include "test_support.hpp"

using namespace specfact;

namespace {

const LaurentPoly kS(1, {cd{-0.5}, cd{1.25}, cd{-0.5}});  // (z-1/2)(1/z-1/2)

double max_sq_residual(const LaurentPoly& s, const Poly& p, int samples = 512) {
  double worst = 0;
  for (int j = 0; j < samples; ++j) {
    const double th = 2.0 * std::numbers::pi * j / samples;
    worst = std::max(worst,
                     std::abs(std::norm(p.eval(unit_circle_point(th))) - s.eval_real_on_circle(th)));
  }
  return worst;
}

double max_s(const LaurentPoly& s, int samples = 512) {
  double v = 0;
  for (int j = 0; j < samples; ++j)
    v = std::max(v, std::abs(s.eval_real_on_circle(2.0 * std::numbers::pi * j / samples)));
  return v;
}

}  // namespace

TEST_CASE("scalar_factor: outside selection gives 0.5z - 1") {
  const Poly p = scalar_factor(kS, FactorSelection::all_outside(1));
  REQUIRE(p.degree() == 1);
  CHECK(std::abs(p.coeff(1) - cd{0.5}) < 1e-12);
  CHECK(std::abs(p.coeff(0) - cd{-1.0}) < 1e-12);
  CHECK(max_sq_residual(kS, p) < 1e-9 * max_s(kS));
}

TEST_CASE("scalar_factor: constant input takes the positive square root") {
  const Poly p = scalar_factor(LaurentPoly::constant(cd{4.0}), FactorSelection::all_outside(0));
  REQUIRE(p.degree() == 0);
  CHECK(std::abs(p.coeff(0) - cd{2.0}) < 1e-12);
}

TEST_CASE("scalar_factor: mixed split of a double pair") {
  const LaurentPoly s2 = kS * kS;  // det of diag(s, s); one pair, multiplicity 2
  // one copy inside, one outside: p = 0.5 z^2 - 1.25 z + 0.5
  const Poly mixed = scalar_factor(s2, FactorSelection(std::vector<bool>{true, false}));
  REQUIRE(mixed.degree() == 2);
  CHECK(std::abs(mixed.coeff(2) - cd{0.5}) < 1e-9);
  CHECK(std::abs(mixed.coeff(1) - cd{-1.25}) < 1e-9);
  CHECK(std::abs(mixed.coeff(0) - cd{0.5}) < 1e-9);
  // the two mixed orders describe the same factor
  const Poly mixed2 = scalar_factor(s2, FactorSelection(std::vector<bool>{false, true}));
  CHECK(sft::poly_sup_diff(mixed, mixed2) < 1e-9);
  CHECK(max_sq_residual(s2, mixed) < 1e-9 * max_s(s2));

  CHECK_THROWS_AS(scalar_factor(s2, FactorSelection::all_outside(1)), InvalidArgument);
}

TEST_CASE("enumerate_scalar: constants, the L=1 pair, planted L=2") {
  const std::vector<Poly> trivial = enumerate_scalar(LaurentPoly::constant(cd{1.0}));
  REQUIRE(trivial.size() == 1);
  CHECK(std::abs(trivial[0].coeff(0) - cd{1.0}) < 1e-12);

  const std::vector<Poly> two = enumerate_scalar(kS);
  REQUIRE(two.size() == 2);
  CHECK(std::abs(two[0].coeff(1) - cd{0.5}) < 1e-10);  // mask 0: outside
  CHECK(std::abs(two[0].coeff(0) - cd{-1.0}) < 1e-10);
  CHECK(std::abs(two[1].coeff(1) - cd{1.0}) < 1e-10);  // mask 1: inside
  CHECK(std::abs(two[1].coeff(0) - cd{-0.5}) < 1e-10);

  const LaurentPoly planted = self_product(Poly::from_roots(1.0, {cd{0.3}, cd{0.0, 0.6}}));
  const std::vector<Poly> four = enumerate_scalar(planted);
  REQUIRE(four.size() == 4);
  for (const Poly& p : four) CHECK(max_sq_residual(planted, p) < 1e-9 * max_s(planted));
  // pairwise non-proportional: quotients move on the circle
  for (size_t i = 0; i < four.size(); ++i)
    for (size_t j = i + 1; j < four.size(); ++j)
      CHECK_FALSE(match_up_to_czk(four[i], four[j], 1e-6).has_value());

  CHECK_THROWS_AS(enumerate_scalar(kS * kS), SimpleRootsRequired);
}

TEST_CASE("all selections share the modulus on the circle") {
  auto g = sft::rng(41);
  const LaurentPoly s = self_product(Poly::from_roots(1.0, sft::distinct_roots(g, 3)));
  const std::vector<Poly> all = enumerate_scalar(s);
  REQUIRE(all.size() == 8);
  for (int j = 0; j < 64; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / 64);
    const double ref = std::abs(all[0].eval(z));
    for (const Poly& p : all) CHECK(std::abs(std::abs(p.eval(z)) - ref) < 1e-9 * (1.0 + ref));
  }
}

TEST_CASE("min_phase: no roots inside the open disk") {
  const Poly p = min_phase(kS);
  CHECK(std::abs(p.coeff(1) - cd{0.5}) < 1e-12);
  CHECK(std::abs(p.coeff(0) - cd{-1.0}) < 1e-12);

  const Poly c = min_phase(LaurentPoly::constant(cd{9.0}));
  CHECK(std::abs(c.coeff(0) - cd{3.0}) < 1e-12);

  auto g = sft::rng(42);
  const LaurentPoly s = self_product(Poly::from_roots(1.0, sft::distinct_roots(g, 4)));
  for (const Root& r : find_roots(min_phase(s)).roots)
    CHECK(std::abs(r.location) > 1.0);
}

TEST_CASE("group delay variance: linear phase, unimodular shift invariance") {
  CHECK(group_delay_variance(Poly(std::vector<cd>{cd{1.0}, cd{2.0}, cd{1.0}})) < 1e-10);

  auto g = sft::rng(43);
  std::vector<cd> c(5);
  for (cd& v : c) v = sft::random_complex(g);
  const Poly p{std::vector<cd>(c)};
  const Poly shifted = p * Poly(std::vector<cd>{cd{}, cd{}, cd{0.0, 1.0}});  // i z^2 p
  CHECK(std::abs(group_delay_variance(p) - group_delay_variance(shifted)) < 1e-9);
}

TEST_CASE("mid_phase: one pair resolves deterministically to the better score") {
  const Poly best = mid_phase(kS);
  const std::vector<Poly> both = enumerate_scalar(kS);
  const double s0 = group_delay_variance(both[0]);
  const double s1 = group_delay_variance(both[1]);
  const double got = group_delay_variance(best);
  CHECK(got <= std::min(s0, s1) + 1e-12);

  const Poly cst = mid_phase(LaurentPoly::constant(cd{4.0}));
  CHECK(std::abs(cst.coeff(0) - cd{2.0}) < 1e-12);
}

TEST_CASE("balanced selector: floor(L/2) pairs inside, valid factor") {
  CHECK(balanced_selection(4).to_string() == "0011");
  CHECK(balanced_selection(5).to_string() == "00011");
  CHECK(balanced_selection(0).to_string() == "");

  auto g = sft::rng(45);
  const LaurentPoly s = self_product(Poly::from_roots(1.0, sft::distinct_roots(g, 4)));
  const Poly p = balanced_phase(s);
  int inside = 0;
  for (const Root& r : find_roots(p).roots)
    if (std::abs(r.location) < 1.0) inside += r.multiplicity;
  CHECK(inside == 2);
  CHECK(max_sq_residual(s, p) < 1e-9 * max_s(s));
}

TEST_CASE("odd circle multiplicity cannot be split") {
  SymmetricRoots cls;
  cls.circle.push_back({cd{-1.0}, 1});
  CHECK_THROWS_AS(detail::selected_roots(cls, FactorSelection::all_outside(0)), RootOnCircle);
}

TEST_CASE("mid_phase: exhaustive argmin over planted selections") {
  auto g = sft::rng(44);
  const LaurentPoly s = self_product(Poly::from_roots(1.0, sft::distinct_roots(g, 3)));
  const Poly winner = mid_phase(s);
  const double win_score = group_delay_variance(winner);
  for (const Poly& p : enumerate_scalar(s))
    CHECK(win_score <= group_delay_variance(p) + 1e-12);
}
