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

// Matrix polynomials P(z) = sum B_n z^n and Laurent matrix functions
// S(z) = sum_{-N..N} C_n z^n, with the operations the factorization layers
// are built on: Horner evaluation, the tilde adjoint, P * tilde(P), and
// determinants by unit-circle interpolation.

#ifndef SPECFACT_LAURENT_HPP
#define SPECFACT_LAURENT_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "specfact/cmatrix.hpp"
#include "specfact/errors.hpp"
#include "specfact/linalg.hpp"
#include "specfact/poly.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

class PolyMatrix {
 public:
  PolyMatrix() = default;

  PolyMatrix(int m, std::vector<CMatrix> coeffs, double trim_tol = tol::kTrim) : m_(m), b_(std::move(coeffs)) {
    if (m_ < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    if (b_.empty()) b_.emplace_back(m_, m_);
    for (const CMatrix& c : b_) {
      if (c.rows() != m_ || c.cols() != m_) throw DimensionMismatch("coefficient block shape");
      if (!c.all_finite()) throw InvalidArgument("non-finite matrix coefficient");
    }
    trim(trim_tol);
  }

  static PolyMatrix identity(int m) { return PolyMatrix(m, {CMatrix::identity(m)}); }
  static PolyMatrix constant(const CMatrix& c) { return PolyMatrix(c.rows(), {c}); }

  int dim() const { return m_; }
  int degree() const { return static_cast<int>(b_.size()) - 1; }

  const CMatrix& coeff(int n) const { return b_[static_cast<size_t>(n)]; }
  CMatrix coeff_or_zero(int n) const {
    return (n >= 0 && n <= degree()) ? b_[static_cast<size_t>(n)] : CMatrix(m_, m_);
  }

  CMatrix eval(cd z) const {
    CMatrix acc = b_.back();
    for (int n = degree() - 1; n >= 0; --n) acc = acc * z + b_[static_cast<size_t>(n)];
    return acc;
  }

  double sup_norm() const {
    double s = 0;
    for (const CMatrix& c : b_) s = std::max(s, c.max_abs());
    return s;
  }

  // P(z) * V for a constant matrix V.
  PolyMatrix times(const CMatrix& v) const {
    std::vector<CMatrix> c;
    c.reserve(b_.size());
    for (const CMatrix& bn : b_) c.push_back(bn * v);
    return PolyMatrix(m_, std::move(c), 0.0);
  }

  PolyMatrix& trim(double rel_tol = tol::kTrim) {
    const double cut = rel_tol * sup_norm();
    while (b_.size() > 1 && b_.back().max_abs() <= cut) b_.pop_back();
    return *this;
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.m_ != b.m_) throw DimensionMismatch("poly matrix product dims");
    std::vector<CMatrix> c(static_cast<size_t>(a.degree() + b.degree()) + 1, CMatrix(a.m_, a.m_));
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return PolyMatrix(a.m_, std::move(c));
  }

 private:
  int m_ = 0;
  std::vector<CMatrix> b_;
};

class LaurentMatrix {
 public:
  LaurentMatrix() = default;

  LaurentMatrix(int m, int degree, std::vector<CMatrix> coeffs, double trim_tol = tol::kTrim)
      : m_(m), n_(degree), c_(std::move(coeffs)) {
    if (m_ < 1 || n_ < 0) throw DimensionMismatch("laurent matrix dims");
    if (c_.size() != static_cast<size_t>(2 * n_ + 1))
      throw DimensionMismatch("laurent matrix needs 2N+1 coefficient blocks");
    for (const CMatrix& c : c_) {
      if (c.rows() != m_ || c.cols() != m_) throw DimensionMismatch("coefficient block shape");
      if (!c.all_finite()) throw InvalidArgument("non-finite matrix coefficient");
    }
    trim(trim_tol);
  }

  static LaurentMatrix identity(int m) { return LaurentMatrix(m, 0, {CMatrix::identity(m)}); }

  int dim() const { return m_; }
  int degree() const { return n_; }

  const CMatrix& coeff(int n) const { return c_[static_cast<size_t>(n + n_)]; }
  CMatrix coeff_or_zero(int n) const {
    return (n >= -n_ && n <= n_) ? coeff(n) : CMatrix(m_, m_);
  }

  CMatrix eval(cd z) const {
    CMatrix acc(m_, m_);
    for (int n = n_; n >= 1; --n) acc = (acc + coeff(n)) * z;
    CMatrix accm(m_, m_);
    if (n_ > 0) {
      const cd w = 1.0 / z;
      for (int n = -n_; n <= -1; ++n) accm = (accm + coeff(n)) * w;
    }
    return acc + accm + coeff(0);
  }

  bool is_para_hermitian(double rel_tol = tol::kParaHermitian) const {
    const double cut = rel_tol * sup_norm();
    for (int n = 0; n <= n_; ++n)
      if (max_abs_diff(coeff(-n), coeff(n).adjoint()) > cut) return false;
    return true;
  }

  double sup_norm() const {
    double s = 0;
    for (const CMatrix& c : c_) s = std::max(s, c.max_abs());
    return s;
  }

  LaurentMatrix& trim(double rel_tol = tol::kTrim) {
    const double cut = rel_tol * sup_norm();
    while (n_ > 0 && c_.front().max_abs() <= cut && c_.back().max_abs() <= cut) {
      c_.erase(c_.begin());
      c_.pop_back();
      --n_;
    }
    return *this;
  }

  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.m_ != b.m_) throw DimensionMismatch("laurent matrix difference dims");
    const int n = std::max(a.n_, b.n_);
    std::vector<CMatrix> c;
    c.reserve(static_cast<size_t>(2 * n + 1));
    for (int k = -n; k <= n; ++k) c.push_back(a.coeff_or_zero(k) - b.coeff_or_zero(k));
    return LaurentMatrix(a.m_, n, std::move(c));
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<CMatrix> c_;
};

inline LaurentMatrix to_laurent(const PolyMatrix& p) {
  const int n = p.degree();
  std::vector<CMatrix> c;
  c.reserve(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c.push_back(p.coeff_or_zero(k));
  return LaurentMatrix(p.dim(), n, std::move(c), 0.0);
}

// tilde(S)(z) = S(1/conj(z))^H: block C_n moves to -n conjugate-transposed.
inline LaurentMatrix tilde(const LaurentMatrix& s) {
  const int n = s.degree();
  std::vector<CMatrix> c;
  c.reserve(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) c.push_back(s.coeff(-k).adjoint());
  return LaurentMatrix(s.dim(), n, std::move(c), 0.0);
}

inline LaurentMatrix tilde(const PolyMatrix& p) { return tilde(to_laurent(p)); }

// P * tilde(P); para-Hermitian by construction.
inline LaurentMatrix mul_factor(const PolyMatrix& p) {
  const int n = p.degree();
  const int m = p.dim();
  std::vector<CMatrix> c(static_cast<size_t>(2 * n + 1), CMatrix(m, m));
  for (int k = 0; k <= n; ++k) {
    CMatrix s(m, m);
    for (int j = 0; j + k <= n; ++j) s += p.coeff(j + k) * p.coeff(j).adjoint();
    c[static_cast<size_t>(k + n)] = s;
    c[static_cast<size_t>(-k + n)] = s.adjoint();
  }
  return LaurentMatrix(m, n, std::move(c));
}

// det P as a polynomial, interpolated from m*N+1 roots of unity.
inline Poly det_poly(const PolyMatrix& p) {
  const int bound = p.dim() * p.degree();
  const int k = bound + 1;
  std::vector<cd> values(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j)
    values[static_cast<size_t>(j)] = determinant(p.eval(unit_circle_point(2.0 * std::numbers::pi * j / k)));
  std::vector<cd> coeffs(static_cast<size_t>(bound + 1));
  for (int n = 0; n <= bound; ++n) {
    cd s{};
    for (int j = 0; j < k; ++j)
      s += values[static_cast<size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * n / k);
    coeffs[static_cast<size_t>(n)] = s / static_cast<double>(k);
  }
  return Poly(std::move(coeffs));
}

// det S on the symmetric range -m*N..m*N, interpolated at 2*m*N+1 points.
inline LaurentPoly det_laurent(const LaurentMatrix& s, double para_tol = tol::kParaHermitian) {
  if (!s.is_para_hermitian(para_tol))
    throw NotParaHermitian("det_laurent requires a para-Hermitian input");
  const int bound = s.dim() * s.degree();
  const int k = 2 * bound + 1;
  std::vector<cd> values(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j)
    values[static_cast<size_t>(j)] = determinant(s.eval(unit_circle_point(2.0 * std::numbers::pi * j / k)));
  std::vector<cd> coeffs(static_cast<size_t>(2 * bound + 1));
  for (int n = -bound; n <= bound; ++n) {
    cd acc{};
    for (int j = 0; j < k; ++j)
      acc += values[static_cast<size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * n / k);
    coeffs[static_cast<size_t>(n + bound)] = acc / static_cast<double>(k);
  }
  return LaurentPoly(bound, std::move(coeffs));
}

// Tests f = c * z^k * g with |c| = 1 allowed to drift, via circle samples.
// Returns the (c, k) pair when the match holds to rel_tol.
struct UnimodularMatch {
  cd c;
  int k = 0;
};

inline std::optional<UnimodularMatch> match_up_to_czk(const Poly& f, const Poly& g,
                                                      double rel_tol = 1e-7) {
  if (f.is_zero() && g.is_zero()) return UnimodularMatch{1.0, 0};
  if (f.is_zero() || g.is_zero()) return std::nullopt;
  const int samples = 64;
  std::vector<cd> ratio;
  std::vector<double> thetas;
  double fmax = 0, gmax = 0;
  for (int j = 0; j < samples; ++j) {
    const double th = 2.0 * std::numbers::pi * j / samples;
    fmax = std::max(fmax, std::abs(f.eval(unit_circle_point(th))));
    gmax = std::max(gmax, std::abs(g.eval(unit_circle_point(th))));
  }
  if (gmax == 0 || fmax == 0) return std::nullopt;
  for (int j = 0; j < samples; ++j) {
    const double th = 2.0 * std::numbers::pi * j / samples;
    const cd fv = f.eval(unit_circle_point(th));
    const cd gv = g.eval(unit_circle_point(th));
    if (std::abs(gv) < 1e-8 * gmax || std::abs(fv) < 1e-8 * fmax) continue;
    ratio.push_back(fv / gv);
    thetas.push_back(th);
  }
  if (ratio.size() < 8) return std::nullopt;
  double winding = 0;
  for (size_t i = 1; i <= ratio.size(); ++i) {
    const cd prev = ratio[i - 1];
    const cd next = ratio[i % ratio.size()];
    winding += std::arg(next / prev);
  }
  const int k = static_cast<int>(std::lround(winding / (2.0 * std::numbers::pi)));
  cd csum{};
  for (size_t i = 0; i < ratio.size(); ++i)
    csum += ratio[i] * std::polar(1.0, -k * thetas[i]);
  cd c = csum / static_cast<double>(ratio.size());
  if (std::abs(c) == 0) return std::nullopt;
  c /= std::abs(c);  // report a unimodular constant
  double worst = 0;
  for (int j = 0; j < samples; ++j) {
    const double th = 2.0 * std::numbers::pi * j / samples;
    const cd z = unit_circle_point(th);
    worst = std::max(worst, std::abs(f.eval(z) - c * std::polar(1.0, k * th) * g.eval(z)));
  }
  if (worst > rel_tol * std::max(fmax, gmax)) return std::nullopt;
  return UnimodularMatch{c, k};
}

}  // namespace specfact

#endif  // SPECFACT_LAURENT_HPP
