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

// The optimal (minimum-phase) spectral factor by Bauer's method: Cholesky
// factorization of the growing banded block-Toeplitz matrix [C_{i-j}], whose
// trailing block row converges to (A_N ... A_1 A_0). The limit's constant
// block A_0 inherits the Cholesky normalization: lower triangular with
// positive real diagonal.

#ifndef SPECFACT_BAUER_HPP
#define SPECFACT_BAUER_HPP

#include <deque>
#include <numbers>
#include <string>
#include <vector>

#include "specfact/errors.hpp"
#include "specfact/laurent.hpp"
#include "specfact/linalg.hpp"
#include "specfact/scalar_fejer.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

struct BauerOptions {
  double tol = 1e-10;        // trailing-row stabilization, relative
  int max_block = 4096;      // block rows before giving up
  int pd_samples = 64;       // circle samples for the positivity precheck
  double pd_floor = 1e-10;   // relative eigenvalue floor
};

namespace detail {

inline void require_positive_definite_on_circle(const LaurentMatrix& s, int samples,
                                                double rel_floor) {
  double min_eig = std::numeric_limits<double>::max();
  double scale = 0;
  for (int j = 0; j < samples; ++j) {
    const CMatrix v = s.eval(unit_circle_point(2.0 * std::numbers::pi * j / samples));
    const CMatrix h = (v + v.adjoint()) * cd{0.5};
    scale = std::max(scale, h.frobenius_norm());
    const std::vector<double> ev = hermitian_eigenvalues(h);
    min_eig = std::min(min_eig, ev.front());
  }
  if (min_eig <= rel_floor * scale)
    throw NotPositiveDefinite("sampled minimum eigenvalue " + std::to_string(min_eig) +
                              " at scale " + std::to_string(scale));
}

}  // namespace detail

inline PolyMatrix bauer_factor(const LaurentMatrix& s, const BauerOptions& opts = {}) {
  if (!s.is_para_hermitian())
    throw NotParaHermitian("bauer_factor requires a para-Hermitian input");
  detail::require_positive_definite_on_circle(s, opts.pd_samples, opts.pd_floor);

  const int m = s.dim();
  const int n = s.degree();
  const double snorm = s.sup_norm();
  if (n == 0) {
    // Constant positive definite matrix: its Cholesky factor is the answer.
    return PolyMatrix(m, {cholesky_lower(s.coeff(0))});
  }

  // rows holds the banded block rows (L_{i,i-n} ... L_{i,i}) of the most
  // recent i, newest at the back; only the last n rows are ever read.
  std::deque<std::vector<CMatrix>> rows;
  std::vector<CMatrix> prev_row;
  for (int i = 0; i < opts.max_block; ++i) {
    std::vector<CMatrix> row(static_cast<size_t>(n + 1), CMatrix(m, m));
    const int jlo = std::max(0, i - n);
    for (int j = jlo; j <= i; ++j) {
      // sum_k L_{i,k} L_{j,k}^H over the shared band
      CMatrix acc(m, m);
      const int klo = std::max(jlo, j - n);
      for (int k = klo; k < j; ++k) {
        const CMatrix& lik = row[static_cast<size_t>(k - i + n)];
        const CMatrix& ljk =
            (j == i) ? row[static_cast<size_t>(k - i + n)]
                     : rows[rows.size() - static_cast<size_t>(i - j)][static_cast<size_t>(k - j + n)];
        acc += lik * ljk.adjoint();
      }
      if (j < i) {
        const std::vector<CMatrix>& rowj = rows[rows.size() - static_cast<size_t>(i - j)];
        const CMatrix& ljj = rowj[static_cast<size_t>(n)];
        CMatrix rhs = s.coeff_or_zero(i - j) - acc;
        // solve X * L_jj^H = rhs; L_jj^H is upper triangular
        row[static_cast<size_t>(j - i + n)] = solve_right_upper(ljj.adjoint(), rhs);
      } else {
        CMatrix diag = s.coeff(0) - acc;
        row[static_cast<size_t>(n)] = cholesky_lower(diag);
      }
    }
    if (i >= n && !prev_row.empty()) {
      double diff = 0, scale = 0;
      for (int b = 0; b <= n; ++b) {
        diff = std::max(diff, max_abs_diff(row[static_cast<size_t>(b)], prev_row[static_cast<size_t>(b)]));
        scale = std::max(scale, prev_row[static_cast<size_t>(b)].max_abs());
      }
      if (scale > 0 && diff <= opts.tol * scale) {
        std::vector<CMatrix> coeffs(static_cast<size_t>(n + 1), CMatrix(m, m));
        for (int b = 0; b <= n; ++b) coeffs[static_cast<size_t>(n - b)] = row[static_cast<size_t>(b)];
        PolyMatrix p(m, std::move(coeffs));
        const double resid = (mul_factor(p) - s).sup_norm();
        if (resid <= opts.tol * snorm) return p;
      }
    }
    prev_row = row;
    rows.push_back(std::move(row));
    if (rows.size() > static_cast<size_t>(n) + 1) rows.pop_front();
  }
  throw NoConvergence("bauer iteration: trailing block row did not stabilize within " +
                      std::to_string(opts.max_block) + " block rows");
}

// Scalar shortcut: the Fejer-Riesz minimum-phase factor, wrapped as 1x1.
inline PolyMatrix optimal_scalar_shortcut(const LaurentMatrix& s,
                                          double boundary_tol = tol::kBoundary) {
  if (s.dim() != 1) throw DimensionMismatch("optimal_scalar_shortcut needs m = 1");
  const int l = s.degree();
  std::vector<cd> coeffs(static_cast<size_t>(2 * l + 1));
  for (int k = -l; k <= l; ++k) coeffs[static_cast<size_t>(k + l)] = s.coeff(k)(0, 0);
  const Poly p = min_phase(LaurentPoly(l, std::move(coeffs)), boundary_tol);
  std::vector<CMatrix> blocks;
  for (int k = 0; k <= p.degree(); ++k) {
    CMatrix b(1, 1);
    b(0, 0) = p.coeff(k);
    blocks.push_back(b);
  }
  return PolyMatrix(1, std::move(blocks));
}

}  // namespace specfact

#endif  // SPECFACT_BAUER_HPP
