#include <doctest.h>

#include <complex>
#include <numbers>
#include <vector>

#include "specfact/laurent.hpp"
#include "specfact/poly.hpp"
#include "test_support.hpp"

using namespace specfact;

namespace {

// P = diag(z - a, 1 - conj(a) z), the running 2x2 example.
PolyMatrix diag_pair_factor(cd a) {
  CMatrix b0(2, 2), b1(2, 2);
  b0(0, 0) = -a;
  b0(1, 1) = 1.0;
  b1(0, 0) = 1.0;
  b1(1, 1) = -std::conj(a);
  return PolyMatrix(2, {b0, b1});
}

LaurentPoly laurent_of(std::vector<cd> c) {
  const int l = (static_cast<int>(c.size()) - 1) / 2;
  return LaurentPoly(l, std::move(c));
}

}  // namespace

TEST_CASE("eval: constants, forced diagonal value, power-sum oracle") {
  CHECK(max_abs_diff(PolyMatrix::identity(3).eval(cd{3.0}), CMatrix::identity(3)) == 0.0);

  const PolyMatrix p = diag_pair_factor(cd{0.5});
  const CMatrix at_half = p.eval(cd{0.5});
  CHECK(std::abs(at_half(0, 0)) < 1e-15);
  CHECK(std::abs(at_half(1, 1) - cd{0.75}) < 1e-15);
  CHECK(std::abs(at_half(0, 1)) == 0.0);

  auto g = sft::rng(21);
  const PolyMatrix r = sft::random_poly_matrix(g, 2, 3);
  const cd z = unit_circle_point(std::numbers::pi / 7);
  CHECK(max_abs_diff(r.eval(z), sft::eval_power_sum(r, z)) < 1e-13);
}

TEST_CASE("tilde: adjoint identity and exact involution") {
  const LaurentMatrix ti = tilde(PolyMatrix::identity(2));
  CHECK(ti.degree() == 0);
  CHECK(max_abs_diff(ti.coeff(0), CMatrix::identity(2)) == 0.0);

  // p(z) = z - 0.5 -> tilde = z^{-1} - 0.5
  CMatrix c0(1, 1), c1(1, 1);
  c0(0, 0) = -0.5;
  c1(0, 0) = 1.0;
  const LaurentMatrix tp = tilde(PolyMatrix(1, {c0, c1}));
  CHECK(tp.coeff(-1)(0, 0) == cd{1.0});
  CHECK(tp.coeff(0)(0, 0) == cd{-0.5});

  auto g = sft::rng(22);
  const PolyMatrix p = sft::random_poly_matrix(g, 3, 2);
  const LaurentMatrix lt = tilde(p);
  for (int j = 0; j < 20; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * (j + 0.3) / 20);
    CHECK(max_abs_diff(lt.eval(z), p.eval(1.0 / std::conj(z)).adjoint()) < 1e-12);
  }

  // applying tilde twice returns the embedding exactly (bitwise)
  const LaurentMatrix embedded = to_laurent(p);
  const LaurentMatrix twice = tilde(tilde(embedded));
  CHECK(twice.degree() == embedded.degree());
  for (int n = -embedded.degree(); n <= embedded.degree(); ++n)
    CHECK(max_abs_diff(twice.coeff(n), embedded.coeff(n)) == 0.0);
}

TEST_CASE("mul_factor: identity, frozen diagonal case, pointwise oracle") {
  const LaurentMatrix si = mul_factor(PolyMatrix::identity(2));
  CHECK(si.degree() == 0);
  CHECK(max_abs_diff(si.coeff(0), CMatrix::identity(2)) == 0.0);

  // diag(z-1/2, 1-z/2): both diagonal entries of P tilde(P) are
  // s = -z/2 + 5/4 - 1/(2z)
  const LaurentMatrix s = mul_factor(diag_pair_factor(cd{0.5}));
  CHECK(s.degree() == 1);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(s.coeff(0)(i, i) - cd{1.25}) < 1e-15);
    CHECK(std::abs(s.coeff(1)(i, i) - cd{-0.5}) < 1e-15);
    CHECK(std::abs(s.coeff(-1)(i, i) - cd{-0.5}) < 1e-15);
  }
  CHECK(std::abs(s.coeff(1)(0, 1)) == 0.0);

  auto g = sft::rng(23);
  const PolyMatrix p = sft::random_poly_matrix(g, 3, 2);
  const LaurentMatrix sp = mul_factor(p);
  CHECK(sp.is_para_hermitian());
  const double scale = sp.sup_norm();
  for (int j = 0; j < 16; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / 16);
    const CMatrix expect = p.eval(z) * p.eval(1.0 / std::conj(z)).adjoint();
    CHECK(max_abs_diff(sp.eval(z), expect) < 1e-12 * scale);
  }
}

TEST_CASE("det_poly: constants, frozen quadratic, cofactor oracle") {
  const Poly d1 = det_poly(PolyMatrix::identity(4));
  CHECK(d1.degree() == 0);
  CHECK(std::abs(d1.coeff(0) - cd{1.0}) < 1e-14);

  // (z - 1/2)(1 - z/2) = -z^2/2 + 5z/4 - 1/2
  const Poly d2 = det_poly(diag_pair_factor(cd{0.5}));
  CHECK(d2.degree() == 2);
  CHECK(std::abs(d2.coeff(2) - cd{-0.5}) < 1e-14);
  CHECK(std::abs(d2.coeff(1) - cd{1.25}) < 1e-14);
  CHECK(std::abs(d2.coeff(0) - cd{-0.5}) < 1e-14);

  auto g = sft::rng(24);
  for (int rep = 0; rep < 5; ++rep) {
    const PolyMatrix p = sft::random_poly_matrix(g, 2, 2);
    const Poly mine = det_poly(p);
    const std::vector<cd> oracle = sft::cofactor_det(sft::entries_of(p));
    for (size_t k = 0; k < oracle.size(); ++k)
      CHECK(std::abs(mine.coeff(static_cast<int>(k)) - oracle[k]) < 1e-11);
  }
}

TEST_CASE("det_laurent: frozen square, multiplicativity oracle, rejection") {
  const LaurentPoly one = det_laurent(LaurentMatrix::identity(3));
  CHECK(one.degree() == 0);
  CHECK(std::abs(one.coeff(0) - cd{1.0}) < 1e-14);

  // diag(s, s) with s = 5/4 - z/2 - 1/(2z): det = s^2
  const LaurentPoly d = det_laurent(mul_factor(diag_pair_factor(cd{0.5})));
  CHECK(d.degree() == 2);
  CHECK(std::abs(d.coeff(2) - cd{0.25}) < 1e-13);
  CHECK(std::abs(d.coeff(1) - cd{-1.25}) < 1e-13);
  CHECK(std::abs(d.coeff(0) - cd{2.0625}) < 1e-13);
  CHECK(std::abs(d.coeff(-1) - cd{-1.25}) < 1e-13);
  CHECK(std::abs(d.coeff(-2) - cd{0.25}) < 1e-13);

  auto g = sft::rng(25);
  const PolyMatrix q = sft::random_poly_matrix(g, 2, 2);
  const LaurentPoly left = det_laurent(mul_factor(q));
  const LaurentPoly right = to_laurent(det_poly(q)) * tilde(det_poly(q));
  CHECK((left - right).sup_norm() < 1e-10 * right.sup_norm());

  // a visibly asymmetric Laurent matrix must be rejected
  CMatrix a(1, 1), b(1, 1), c(1, 1);
  a(0, 0) = 1.0;
  b(0, 0) = 2.0;
  c(0, 0) = 3.0;
  CHECK_THROWS_AS(det_laurent(LaurentMatrix(1, 1, {a, b, c})), NotParaHermitian);
}

TEST_CASE("property: det multiplicativity on random pairs") {
  auto g = sft::rng(26);
  for (int rep = 0; rep < 10; ++rep) {
    const int m = 1 + static_cast<int>(rep % 3);
    const int dp = 1 + static_cast<int>(rep % 3);
    const PolyMatrix p = sft::random_poly_matrix(g, m, dp);
    const PolyMatrix q = sft::random_poly_matrix(g, m, 3 - (rep % 3));
    const Poly lhs = det_poly(p * q);
    const Poly rhs = det_poly(p) * det_poly(q);
    CHECK(sft::poly_sup_diff(lhs, rhs) < 1e-10 * std::max(1.0, rhs.sup_norm()));
  }
}

TEST_CASE("property: mul_factor is PSD on the circle") {
  auto g = sft::rng(27);
  for (int rep = 0; rep < 6; ++rep) {
    const int m = 1 + (rep % 3);
    const PolyMatrix p = sft::random_poly_matrix(g, m, 2);
    const LaurentMatrix s = mul_factor(p);
    const double scale = s.sup_norm();
    for (int j = 0; j < 64; ++j) {
      const CMatrix v = s.eval(unit_circle_point(2.0 * std::numbers::pi * j / 64));
      const CMatrix h = (v + v.adjoint()) * cd{0.5};
      CHECK(hermitian_eigenvalues(h).front() >= -1e-10 * scale);
    }
  }
}

TEST_CASE("match_up_to_czk accepts unimodular shifts and rejects scalings") {
  auto g = sft::rng(28);
  const Poly p(std::vector<cd>{cd{1.0, -0.5}, cd{0.25, 1.0}, cd{-2.0, 0.1}});
  const Poly shifted = (p * Poly(std::vector<cd>{cd{}, cd{}, cd{0.0, 1.0}}));  // i z^2 p
  const auto match = match_up_to_czk(shifted, p);
  REQUIRE(match.has_value());
  CHECK(match->k == 2);
  CHECK(std::abs(match->c - cd{0.0, 1.0}) < 1e-9);

  CHECK_FALSE(match_up_to_czk(p * cd{2.0}, p).has_value());
  CHECK_FALSE(match_up_to_czk(p + Poly::constant(cd{0.5}), p).has_value());
}

TEST_CASE("trim keeps exact degrees and laurent symmetry") {
  // degree must not collapse when the leading block is essential
  const PolyMatrix p = diag_pair_factor(cd{0.3, 0.4});
  CHECK(p.degree() == 1);
  // symmetric trim drops matched zero outer coefficients only
  std::vector<cd> c{cd{}, cd{-0.5}, cd{1.25}, cd{-0.5}, cd{}};
  LaurentPoly s = laurent_of(std::move(c));
  CHECK(s.degree() == 1);
  CHECK(s.is_para_hermitian());
}
