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

// Independent validation: sampled positivity reports, factorization
// residuals, determinant-zero location reports, and the classic pair of
// inequivalent 2x2 factors sharing matrix function and determinant.

#ifndef SPECFACT_VERIFY_HPP
#define SPECFACT_VERIFY_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "specfact/errors.hpp"
#include "specfact/laurent.hpp"
#include "specfact/linalg.hpp"
#include "specfact/rootfind.hpp"
#include "specfact/tolerances.hpp"
#include "specfact/zero_flip.hpp"

namespace specfact {

struct PositivityReport {
  double min_eigenvalue = 0;     // over the Hermitian parts of all samples
  double worst_theta = 0;        // sample attaining the minimum
  double hermitian_defect = 0;   // max ||S(z) - S(z)^H|| over samples
  int samples = 0;
};

inline PositivityReport check_positive_definite(const LaurentMatrix& s, int samples = 64) {
  PositivityReport rep;
  rep.samples = samples;
  rep.min_eigenvalue = std::numeric_limits<double>::max();
  for (int j = 0; j < samples; ++j) {
    const double th = 2.0 * std::numbers::pi * j / samples;
    const CMatrix v = s.eval(unit_circle_point(th));
    const CMatrix h = (v + v.adjoint()) * cd{0.5};
    rep.hermitian_defect = std::max(rep.hermitian_defect, max_abs_diff(v, v.adjoint()));
    const double lo = hermitian_eigenvalues(h).front();
    if (lo < rep.min_eigenvalue) {
      rep.min_eigenvalue = lo;
      rep.worst_theta = th;
    }
  }
  return rep;
}

struct FactorCheckReport {
  double coeff_residual = 0;   // || P tilde(P) - S || over coefficients
  double sample_residual = 0;  // sup over circle samples, Frobenius
  double scale = 0;            // ||S|| used for the relative test
  double tolerance = 0;
  bool pass = false;
};

inline FactorCheckReport check_spectral_factor(const PolyMatrix& p, const LaurentMatrix& s,
                                               double rel_tol = tol::kResidual,
                                               int samples = 64) {
  if (p.dim() != s.dim()) throw DimensionMismatch("factor and matrix dimensions differ");
  FactorCheckReport rep;
  rep.tolerance = rel_tol;
  rep.scale = s.sup_norm();
  rep.coeff_residual = (mul_factor(p) - s).sup_norm();
  for (int j = 0; j < samples; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / samples);
    const CMatrix pv = p.eval(z);
    rep.sample_residual =
        std::max(rep.sample_residual, max_abs_diff(pv * pv.adjoint(), s.eval(z)));
  }
  const double cut = rel_tol * std::max(rep.scale, 1e-300);
  rep.pass = rep.coeff_residual <= cut && rep.sample_residual <= cut;
  return rep;
}

struct ZeroReport {
  std::vector<Root> inside;
  std::vector<Root> outside;
  std::vector<Root> on_circle;

  bool optimal() const { return inside.empty(); }
};

inline ZeroReport zero_report(const PolyMatrix& p, double boundary_tol = tol::kBoundary,
                              const RootFindOptions& opts = {}) {
  ZeroReport rep;
  const Poly dp = det_poly(p);
  if (dp.degree() <= 0) return rep;
  for (const Root& r : find_roots(dp, opts).roots) {
    const double mod = std::abs(r.location);
    if (std::abs(mod - 1.0) < boundary_tol)
      rep.on_circle.push_back(r);
    else if (mod < 1.0)
      rep.inside.push_back(r);
    else
      rep.outside.push_back(r);
  }
  return rep;
}

// The standard witness that a preassigned determinant does not pin down the
// factor once det S has repeated roots: diag(z-a, 1-conj(a)z) against its
// swap, both factoring diag(p, p) with identical determinants.
struct NonuniquenessFixture {
  PolyMatrix p_plus;
  PolyMatrix r_plus;
  LaurentMatrix s;
  double residual_p = 0;     // || P tilde(P) - S ||
  double residual_r = 0;
  bool dets_match = false;   // determinants agree up to c z^k
  bool equivalent = true;    // equal_up_to_unitary verdict (must be false)

  bool passes(double rel_tol = tol::kResidual) const {
    const double cut = rel_tol * std::max(s.sup_norm(), 1e-300);
    return residual_p <= cut && residual_r <= cut && dets_match && !equivalent;
  }
};

inline NonuniquenessFixture nonuniqueness_fixture(cd a, double boundary_tol = tol::kBoundary) {
  if (std::abs(a) >= 1.0 - boundary_tol)
    throw RootOnCircle("fixture parameter must satisfy |a| < 1 - boundary_tol");
  CMatrix b0(2, 2), b1(2, 2);
  // P+ = diag(z - a, 1 - conj(a) z)
  b0(0, 0) = -a;
  b0(1, 1) = 1.0;
  b1(0, 0) = 1.0;
  b1(1, 1) = -std::conj(a);
  NonuniquenessFixture fx;
  fx.p_plus = PolyMatrix(2, {b0, b1}, 0.0);
  // R+ swaps the diagonal entries
  CMatrix c0(2, 2), c1(2, 2);
  c0(0, 0) = 1.0;
  c0(1, 1) = -a;
  c1(0, 0) = -std::conj(a);
  c1(1, 1) = 1.0;
  fx.r_plus = PolyMatrix(2, {c0, c1}, 0.0);
  fx.s = mul_factor(fx.p_plus);
  fx.residual_p = (mul_factor(fx.p_plus) - fx.s).sup_norm();
  fx.residual_r = (mul_factor(fx.r_plus) - fx.s).sup_norm();
  fx.dets_match = match_up_to_czk(det_poly(fx.p_plus), det_poly(fx.r_plus)).has_value();
  fx.equivalent = equal_up_to_unitary(fx.p_plus, fx.r_plus).has_value();
  return fx;
}

}  // namespace specfact

#endif  // SPECFACT_VERIFY_HPP
