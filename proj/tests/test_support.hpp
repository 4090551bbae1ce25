// Shared test fixtures: RNG helpers, random unitaries, planted-root
// factors, and the independent oracles the unit tests check against
// (naive power-sum evaluation, convolution products, cofactor determinants).

#ifndef SPECFACT_TEST_SUPPORT_HPP
#define SPECFACT_TEST_SUPPORT_HPP

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "specfact/laurent.hpp"
#include "specfact/poly.hpp"

namespace sft {

using specfact::cd;
using specfact::CMatrix;
using specfact::LaurentMatrix;
using specfact::LaurentPoly;
using specfact::Poly;
using specfact::PolyMatrix;

inline std::mt19937_64 rng(unsigned long seed) { return std::mt19937_64(seed); }

inline cd random_complex(std::mt19937_64& g, double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  return {d(g), d(g)};
}

inline cd random_in_annulus(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> mod(lo, hi);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * std::numbers::pi);
  return std::polar(mod(g), arg(g));
}

// Gram-Schmidt on Gaussian columns; independent of the library's reflectors.
inline CMatrix random_unitary(std::mt19937_64& g, int m) {
  CMatrix u(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) u(i, j) = random_complex(g);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      cd dot{};
      for (int i = 0; i < m; ++i) dot += std::conj(u(i, k)) * u(i, j);
      for (int i = 0; i < m; ++i) u(i, j) -= dot * u(i, k);
    }
    double nn = 0;
    for (int i = 0; i < m; ++i) nn += std::norm(u(i, j));
    nn = std::sqrt(nn);
    for (int i = 0; i < m; ++i) u(i, j) /= nn;
  }
  return u;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& g, int m, int deg) {
  std::vector<CMatrix> b(static_cast<size_t>(deg) + 1, CMatrix(m, m));
  for (CMatrix& c : b)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) c(i, j) = random_complex(g);
  return PolyMatrix(m, std::move(b));
}

// Degree-N factor whose determinant roots are exactly `roots` (m*N of them):
// U_0 (zI - D_1) U_1 ... (zI - D_N) U_N with the roots on the D diagonals.
inline PolyMatrix planted_factor(std::mt19937_64& g, int m, int deg,
                                 const std::vector<cd>& roots) {
  if (static_cast<int>(roots.size()) != m * deg) throw std::logic_error("need m*deg roots");
  PolyMatrix q = PolyMatrix::constant(random_unitary(g, m));
  size_t next = 0;
  for (int stage = 0; stage < deg; ++stage) {
    std::vector<CMatrix> lin(2, CMatrix(m, m));
    for (int i = 0; i < m; ++i) {
      lin[0](i, i) = -roots[next++];
      lin[1](i, i) = 1.0;
    }
    q = q * PolyMatrix(m, std::move(lin)) * PolyMatrix::constant(random_unitary(g, m));
  }
  return q;
}

// Distinct planted roots, also avoiding conjugate-reflection collisions.
inline std::vector<cd> distinct_roots(std::mt19937_64& g, int count, double lo = 0.1,
                                      double hi = 0.9) {
  std::vector<cd> roots;
  while (static_cast<int>(roots.size()) < count) {
    const cd r = random_in_annulus(g, lo, hi);
    bool ok = true;
    for (const cd& other : roots)
      if (std::abs(r - other) < 0.05 || std::abs(r - 1.0 / std::conj(other)) < 0.05) ok = false;
    if (ok) roots.push_back(r);
  }
  return roots;
}

// ---- independent oracles ------------------------------------------------

// Direct power-sum evaluation (no Horner).
inline CMatrix eval_power_sum(const PolyMatrix& p, cd z) {
  CMatrix acc(p.dim(), p.dim());
  cd zp = 1.0;
  for (int n = 0; n <= p.degree(); ++n) {
    acc += p.coeff(n) * zp;
    zp *= z;
  }
  return acc;
}

inline cd eval_power_sum(const std::vector<cd>& coeffs, cd z) {
  cd acc{};
  cd zp = 1.0;
  for (const cd& c : coeffs) {
    acc += c * zp;
    zp *= z;
  }
  return acc;
}

// Naive convolution on raw coefficient vectors.
inline std::vector<cd> conv(const std::vector<cd>& a, const std::vector<cd>& b) {
  std::vector<cd> c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Cofactor (Laplace) expansion of det P over polynomial entries; exponential
// but fine for the m <= 3 oracle cases.
inline std::vector<cd> cofactor_det(const std::vector<std::vector<std::vector<cd>>>& entries) {
  const size_t m = entries.size();
  if (m == 1) return entries[0][0];
  std::vector<cd> acc{cd{}};
  for (size_t j = 0; j < m; ++j) {
    std::vector<std::vector<std::vector<cd>>> minor;
    for (size_t i = 1; i < m; ++i) {
      std::vector<std::vector<cd>> row;
      for (size_t k = 0; k < m; ++k)
        if (k != j) row.push_back(entries[i][k]);
      minor.push_back(std::move(row));
    }
    std::vector<cd> term = conv(entries[0][j], cofactor_det(minor));
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    if (term.size() > acc.size()) acc.resize(term.size());
    for (size_t k = 0; k < term.size(); ++k) acc[k] += sign * term[k];
  }
  return acc;
}

inline std::vector<std::vector<std::vector<cd>>> entries_of(const PolyMatrix& p) {
  std::vector<std::vector<std::vector<cd>>> e(
      static_cast<size_t>(p.dim()),
      std::vector<std::vector<cd>>(static_cast<size_t>(p.dim()),
                                   std::vector<cd>(static_cast<size_t>(p.degree()) + 1)));
  for (int n = 0; n <= p.degree(); ++n)
    for (int i = 0; i < p.dim(); ++i)
      for (int j = 0; j < p.dim(); ++j) e[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(n)] = p.coeff(n)(i, j);
  return e;
}

inline double poly_sup_diff(const Poly& a, const Poly& b) {
  double s = 0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k)
    s = std::max(s, std::abs(a.coeff(k) - b.coeff(k)));
  return s;
}

}  // namespace sft

#endif  // SPECFACT_TEST_SUPPORT_HPP
