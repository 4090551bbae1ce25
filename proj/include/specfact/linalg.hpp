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

// Factorizations for small dense complex matrices: partially pivoted LU,
// Cholesky, one-sided Jacobi SVD, Jacobi eigenvalues of Hermitian matrices,
// and column-pivoted Householder QR. All routines copy their input.

#ifndef SPECFACT_LINALG_HPP
#define SPECFACT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "specfact/cmatrix.hpp"
#include "specfact/errors.hpp"

namespace specfact {

struct Lu {
  CMatrix lu;              // packed L (unit lower) and U
  std::vector<int> perm;   // row permutation applied to the input
  int sign = 1;            // permutation parity
  bool singular = false;   // an exactly-zero pivot occurred
};

inline Lu lu_decompose(CMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("lu needs a square matrix");
  const int n = a.rows();
  Lu f;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    const cd pivot = a(k, k);
    if (pivot == cd{}) {
      f.singular = true;
      continue;
    }
    for (int i = k + 1; i < n; ++i) {
      const cd l = a(i, k) / pivot;
      a(i, k) = l;
      if (l == cd{}) continue;
      for (int j = k + 1; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

inline cd determinant(const CMatrix& a) {
  Lu f = lu_decompose(a);
  if (f.singular) return cd{};
  cd d = static_cast<double>(f.sign);
  for (int k = 0; k < a.rows(); ++k) d *= f.lu(k, k);
  return d;
}

// Solves A X = B.
inline CMatrix lu_solve(const Lu& f, const CMatrix& b) {
  const int n = f.lu.rows();
  if (b.rows() != n) throw DimensionMismatch("lu_solve rhs rows");
  if (f.singular) throw AllSamplesSingular("lu_solve: singular matrix");
  CMatrix x(n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = b(f.perm[i], j);
  // forward (unit lower)
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < i; ++k) {
      const cd l = f.lu(i, k);
      if (l == cd{}) continue;
      for (int j = 0; j < b.cols(); ++j) x(i, j) -= l * x(k, j);
    }
  // backward
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) {
      const cd u = f.lu(i, k);
      if (u == cd{}) continue;
      for (int j = 0; j < b.cols(); ++j) x(i, j) -= u * x(k, j);
    }
    const cd d = f.lu(i, i);
    for (int j = 0; j < b.cols(); ++j) x(i, j) /= d;
  }
  return x;
}

inline CMatrix solve(const CMatrix& a, const CMatrix& b) { return lu_solve(lu_decompose(a), b); }

inline CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::identity(a.rows())); }

// Lower Cholesky factor with positive real diagonal; throws NotPositiveDefinite.
inline CMatrix cholesky_lower(const CMatrix& h) {
  if (h.rows() != h.cols()) throw DimensionMismatch("cholesky needs a square matrix");
  const int n = h.rows();
  CMatrix l(n, n);
  for (int j = 0; j < n; ++j) {
    double d = h(j, j).real();
    for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0) || !std::isfinite(d))
      throw NotPositiveDefinite("cholesky pivot " + std::to_string(j) + " is " + std::to_string(d));
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (int i = j + 1; i < n; ++i) {
      cd s = h(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

// Solves X * U = B for X, with U upper triangular (rows of X independent).
inline CMatrix solve_right_upper(const CMatrix& u, const CMatrix& b) {
  const int n = u.rows();
  CMatrix x(b.rows(), n);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < n; ++j) {
      cd s = b(i, j);
      for (int k = 0; k < j; ++k) s -= x(i, k) * u(k, j);
      x(i, j) = s / u(j, j);
    }
  return x;
}

struct Svd {
  std::vector<double> sigma;  // descending
  CMatrix v;                  // right singular vectors, columns
};

// One-sided Jacobi on the columns; accurate for small singular values.
inline Svd jacobi_svd(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("jacobi_svd needs a square matrix");
  const int n = a.rows();
  CMatrix w = a;
  CMatrix v = CMatrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0, beta = 0;
        cd gamma{};
        for (int i = 0; i < n; ++i) {
          alpha += std::norm(w(i, p));
          beta += std::norm(w(i, q));
          gamma += std::conj(w(i, p)) * w(i, q);
        }
        const double g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const cd phase = gamma / g;
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // right-multiply columns (p,q) by [[c, s], [-s/phase, c/phase]]
        const cd m10 = -s * std::conj(phase), m11 = c * std::conj(phase);
        for (int i = 0; i < n; ++i) {
          const cd wp = w(i, p), wq = w(i, q);
          w(i, p) = c * wp + m10 * wq;
          w(i, q) = s * wp + m11 * wq;
          const cd vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp + m10 * vq;
          v(i, q) = s * vp + m11 * vq;
        }
      }
    if (!rotated) break;
  }
  Svd out;
  out.sigma.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> norms(n);
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += std::norm(w(i, j));
    norms[j] = std::sqrt(s);
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return norms[x] > norms[y]; });
  out.v = CMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.sigma[j] = norms[order[j]];
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, order[j]);
  }
  return out;
}

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi, ascending.
inline std::vector<double> hermitian_eigenvalues(CMatrix h) {
  if (h.rows() != h.cols()) throw DimensionMismatch("hermitian_eigenvalues needs square");
  const int n = h.rows();
  const double eps = std::numeric_limits<double>::epsilon();
  double scale = h.max_abs();
  if (scale == 0) return std::vector<double>(n, 0.0);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
    if (off <= 16 * eps * scale) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cd hpq = h(p, q);
        const double g = std::abs(hpq);
        if (g <= eps * scale) continue;
        const cd phase = hpq / g;
        const double app = h(p, p).real(), aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * g);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        // G = [[c*phase, s*phase], [-s, c]] acting on coordinates (p,q)
        const cd g00 = c * phase, g01 = s * phase;
        const cd g10 = -s, g11 = c;
        for (int i = 0; i < n; ++i) {  // columns: H <- H G
          const cd hp = h(i, p), hq = h(i, q);
          h(i, p) = hp * g00 + hq * g10;
          h(i, q) = hp * g01 + hq * g11;
        }
        for (int j = 0; j < n; ++j) {  // rows: H <- G^H H
          const cd hp = h(p, j), hq = h(q, j);
          h(p, j) = std::conj(g00) * hp + std::conj(g10) * hq;
          h(q, j) = std::conj(g01) * hp + std::conj(g11) * hq;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

struct ColPivQr {
  CMatrix r;              // upper triangular
  std::vector<int> perm;  // column permutation: A(:, perm) = Q R
};

// Householder QR with column pivoting; Q is not accumulated.
inline ColPivQr qr_col_pivot(CMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("qr_col_pivot needs square");
  const int n = a.rows();
  ColPivQr out;
  out.perm.resize(n);
  std::iota(out.perm.begin(), out.perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = -1;
    for (int j = k; j < n; ++j) {
      double s = 0;
      for (int i = k; i < n; ++i) s += std::norm(a(i, j));
      if (s > best) {
        best = s;
        piv = j;
      }
    }
    if (piv != k) {
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, piv));
      std::swap(out.perm[k], out.perm[piv]);
    }
    double xnorm = std::sqrt(best);
    if (xnorm == 0) continue;
    const cd x0 = a(k, k);
    const cd ph = (x0 == cd{}) ? cd{1.0} : x0 / std::abs(x0);
    std::vector<cd> v(n - k);
    for (int i = k; i < n; ++i) v[i - k] = a(i, k);
    v[0] += ph * xnorm;
    double vv = 0;
    for (const cd& e : v) vv += std::norm(e);
    if (vv == 0) continue;
    for (int j = k; j < n; ++j) {
      cd dot{};
      for (int i = k; i < n; ++i) dot += std::conj(v[i - k]) * a(i, j);
      dot *= 2.0 / vv;
      for (int i = k; i < n; ++i) a(i, j) -= dot * v[i - k];
    }
    a(k, k) = -ph * xnorm;  // enforce the exact value
    for (int i = k + 1; i < n; ++i) a(i, k) = 0;
  }
  out.r = std::move(a);
  return out;
}

}  // namespace specfact

#endif  // SPECFACT_LINALG_HPP
