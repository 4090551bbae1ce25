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

// Dense complex matrices, sized for the library's envelope (m <= ~16).
// Row-major storage, value semantics, no views.

#ifndef SPECFACT_CMATRIX_HPP
#define SPECFACT_CMATRIX_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "specfact/errors.hpp"

namespace specfact {

using cd = std::complex<double>;

inline bool is_finite(cd z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
  }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  cd& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cd& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  CMatrix adjoint() const {
    CMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  double frobenius_norm() const {
    double s = 0;
    for (const cd& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0;
    for (const cd& v : a_) s = std::max(s, std::abs(v));
    return s;
  }

  bool all_finite() const {
    for (const cd& v : a_)
      if (!is_finite(v)) return false;
    return true;
  }

  CMatrix& operator+=(const CMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  CMatrix& operator*=(cd s) {
    for (cd& v : a_) v *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cd s) { return a *= s; }
  friend CMatrix operator*(cd s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    CMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const cd aik = a(i, k);
        if (aik == cd{}) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

 private:
  void check_same_shape(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<cd> a_;
};

// ‖A − B‖ in the entrywise sup norm.
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  CMatrix d = a;
  d -= b;
  return d.max_abs();
}

}  // namespace specfact

#endif  // SPECFACT_CMATRIX_HPP
