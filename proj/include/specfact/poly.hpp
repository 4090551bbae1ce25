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

// Scalar complex polynomials and Laurent polynomials.
//
// Poly stores coefficients of z^0..z^deg; the zero polynomial is the empty
// coefficient list. LaurentPoly stores a symmetric index range -L..L. Both
// are immutable value types once built; arithmetic returns trimmed results.

#ifndef SPECFACT_POLY_HPP
#define SPECFACT_POLY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "specfact/cmatrix.hpp"
#include "specfact/errors.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

inline cd unit_circle_point(double theta) { return std::polar(1.0, theta); }

class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<cd> coeffs, double trim_tol = tol::kTrim) : c_(std::move(coeffs)) {
    for (const cd& v : c_)
      if (!is_finite(v)) throw InvalidArgument("non-finite polynomial coefficient");
    trim(trim_tol);
  }

  static Poly constant(cd value) { return Poly(std::vector<cd>{value}); }

  // c * (z - r_0) * ... * (z - r_{k-1})
  static Poly from_roots(cd leading, const std::vector<cd>& roots) {
    std::vector<cd> c{leading};
    for (const cd& r : roots) {
      c.push_back(cd{});
      for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
      c[0] *= -r;
    }
    return Poly(std::move(c), 0.0);
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  cd coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : cd{};
  }
  const std::vector<cd>& coeffs() const { return c_; }
  cd leading() const { return c_.empty() ? cd{} : c_.back(); }

  cd eval(cd z) const {
    cd acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<cd> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Poly(std::move(d), 0.0);
  }

  double sup_norm() const {
    double s = 0;
    for (const cd& v : c_) s = std::max(s, std::abs(v));
    return s;
  }

  Poly& trim(double rel_tol = tol::kTrim) {
    const double cut = rel_tol * sup_norm();
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
    return *this;
  }

  Poly& operator*=(cd s) {
    for (cd& v : c_) v *= s;
    return *this;
  }
  friend Poly operator*(Poly p, cd s) { return p *= s; }
  friend Poly operator*(cd s, Poly p) { return p *= s; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<cd> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<cd> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<cd> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }

 private:
  std::vector<cd> c_;
};

class LaurentPoly {
 public:
  LaurentPoly() : c_(1) {}  // the zero constant

  LaurentPoly(int degree, std::vector<cd> coeffs, double trim_tol = tol::kTrim) : l_(degree), c_(std::move(coeffs)) {
    if (l_ < 0 || c_.size() != static_cast<size_t>(2 * l_ + 1))
      throw DimensionMismatch("laurent coefficient count must be 2L+1");
    for (const cd& v : c_)
      if (!is_finite(v)) throw InvalidArgument("non-finite laurent coefficient");
    trim(trim_tol);
  }

  static LaurentPoly constant(cd value) { return LaurentPoly(0, {value}); }

  int degree() const { return l_; }  // largest |index|, 0 for constants

  cd coeff(int n) const {
    return (n >= -l_ && n <= l_) ? c_[static_cast<size_t>(n + l_)] : cd{};
  }

  bool is_zero() const { return l_ == 0 && c_[0] == cd{}; }

  cd eval(cd z) const {
    // Horner over z for n >= 0 and over 1/z for n < 0.
    cd acc{};
    for (int n = l_; n >= 1; --n) acc = (acc + coeff(n)) * z;
    cd accm{};
    const cd w = 1.0 / z;
    for (int n = -l_; n <= -1; ++n) accm = (accm + coeff(n)) * w;
    return acc + accm + coeff(0);
  }

  // Value on the unit circle assuming para-Hermitian symmetry (real there).
  double eval_real_on_circle(double theta) const {
    double s = coeff(0).real();
    for (int n = 1; n <= l_; ++n) s += 2.0 * (coeff(n) * std::polar(1.0, n * theta)).real();
    return s;
  }

  bool is_para_hermitian(double rel_tol = tol::kParaHermitian) const {
    const double cut = rel_tol * sup_norm();
    for (int n = 0; n <= l_; ++n)
      if (std::abs(coeff(n) - std::conj(coeff(-n))) > cut) return false;
    return true;
  }

  double sup_norm() const {
    double s = 0;
    for (const cd& v : c_) s = std::max(s, std::abs(v));
    return s;
  }

  // z^L * s(z) as an ordinary polynomial of degree 2L.
  Poly to_poly() const { return Poly(std::vector<cd>(c_), 0.0); }

  LaurentPoly& trim(double rel_tol = tol::kTrim) {
    const double cut = rel_tol * sup_norm();
    while (l_ > 0 && std::abs(c_.front()) <= cut && std::abs(c_.back()) <= cut) {
      c_.erase(c_.begin());
      c_.pop_back();
      --l_;
    }
    return *this;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    const int l = std::max(a.l_, b.l_);
    std::vector<cd> c(static_cast<size_t>(2 * l + 1));
    for (int n = -l; n <= l; ++n) c[static_cast<size_t>(n + l)] = a.coeff(n) + b.coeff(n);
    return LaurentPoly(l, std::move(c));
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    const int l = std::max(a.l_, b.l_);
    std::vector<cd> c(static_cast<size_t>(2 * l + 1));
    for (int n = -l; n <= l; ++n) c[static_cast<size_t>(n + l)] = a.coeff(n) - b.coeff(n);
    return LaurentPoly(l, std::move(c));
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const int l = a.l_ + b.l_;
    std::vector<cd> c(static_cast<size_t>(2 * l + 1));
    for (int i = -a.l_; i <= a.l_; ++i) {
      if (a.coeff(i) == cd{}) continue;
      for (int j = -b.l_; j <= b.l_; ++j) c[static_cast<size_t>(i + j + l)] += a.coeff(i) * b.coeff(j);
    }
    return LaurentPoly(l, std::move(c));
  }
  friend LaurentPoly operator*(LaurentPoly a, cd s) {
    for (cd& v : a.c_) v *= s;
    return a;
  }

 private:
  int l_ = 0;
  std::vector<cd> c_;
};

// Adjoint: coefficient of z^n becomes the conjugate of the one at z^{-n}.
inline LaurentPoly tilde(const LaurentPoly& s) {
  const int l = s.degree();
  std::vector<cd> c(static_cast<size_t>(2 * l + 1));
  for (int n = -l; n <= l; ++n) c[static_cast<size_t>(n + l)] = std::conj(s.coeff(-n));
  return LaurentPoly(l, std::move(c), 0.0);
}

// Embeds an ordinary polynomial into the symmetric-range representation.
inline LaurentPoly to_laurent(const Poly& p) {
  const int l = std::max(0, p.degree());
  std::vector<cd> c(static_cast<size_t>(2 * l + 1));
  for (int n = 0; n <= p.degree(); ++n) c[static_cast<size_t>(n + l)] = p.coeff(n);
  return LaurentPoly(l, std::move(c), 0.0);
}

inline LaurentPoly tilde(const Poly& p) { return tilde(to_laurent(p)); }

// p * tilde(p); para-Hermitian by construction.
inline LaurentPoly self_product(const Poly& p) {
  if (p.is_zero()) return LaurentPoly();
  const int d = p.degree();
  std::vector<cd> c(static_cast<size_t>(2 * d + 1));
  for (int k = 0; k <= d; ++k) {
    cd s{};
    for (int n = 0; n + k <= d; ++n) s += p.coeff(n + k) * std::conj(p.coeff(n));
    c[static_cast<size_t>(k + d)] = s;
    c[static_cast<size_t>(-k + d)] = std::conj(s);
  }
  return LaurentPoly(d, std::move(c));
}

// Synthetic division by (z - r): p = (z - r) q + rem.
struct LinearDivision {
  Poly quotient;
  cd remainder;
};

inline LinearDivision divide_linear(const Poly& p, cd r) {
  if (p.is_zero()) return {Poly(), cd{}};
  const int d = p.degree();
  std::vector<cd> q(static_cast<size_t>(std::max(0, d)));
  cd carry{};
  for (int k = d; k >= 1; --k) {
    carry = p.coeff(k) + r * carry;
    q[static_cast<size_t>(k - 1)] = carry;
  }
  const cd rem = p.coeff(0) + r * carry;
  return {Poly(std::move(q), 0.0), rem};
}

}  // namespace specfact

#endif  // SPECFACT_POLY_HPP
