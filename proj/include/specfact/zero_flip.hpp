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

// Moving determinant zeros of a spectral factor across the unit circle
// without changing the factored function: P -> P V U(z), where V is a
// constant unitary whose first column spans the null space of P at the
// zero, and U carries the Blaschke factor on the first diagonal entry.
// The Blaschke multiplication is realized exactly as a synthetic division
// of the first column by the vanishing linear factor followed by a
// multiplication with the reflected one, which keeps the degree fixed.

#ifndef SPECFACT_ZERO_FLIP_HPP
#define SPECFACT_ZERO_FLIP_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specfact/bauer.hpp"
#include "specfact/errors.hpp"
#include "specfact/laurent.hpp"
#include "specfact/linalg.hpp"
#include "specfact/rootfind.hpp"
#include "specfact/scalar_fejer.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

// Unit null vector of a numerically rank-(m-1) matrix. Singular values come
// from the one-sided Jacobi SVD; the vector is then refined by inverse
// iteration through a column-pivoted QR factorization and its phase fixed by
// making the largest-modulus component positive real.
inline std::vector<cd> null_vector(const CMatrix& m, double rank_tol = tol::kRank) {
  if (m.rows() != m.cols()) throw DimensionMismatch("null_vector needs a square matrix");
  const int n = m.rows();
  const Svd svd = jacobi_svd(m);
  const double smax = svd.sigma.front();
  if (n == 1) {
    if (smax > rank_tol * std::max(1.0, smax))
      throw RankDeficiencyMismatch("1x1 matrix is not numerically zero");
    return {cd{1.0}};
  }
  if (smax == 0) throw RankDeficiencyMismatch("zero matrix has nullity > 1");
  if (svd.sigma.back() / smax > rank_tol)
    throw RankDeficiencyMismatch("smallest singular value ratio " +
                                 std::to_string(svd.sigma.back() / smax));
  if (svd.sigma[static_cast<size_t>(n - 2)] / smax <= rank_tol)
    throw RankDeficiencyMismatch("second-smallest singular value ratio " +
                                 std::to_string(svd.sigma[static_cast<size_t>(n - 2)] / smax) +
                                 " indicates nullity > 1");

  std::vector<cd> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = svd.v(i, n - 1);

  auto apply = [&](const std::vector<cd>& x) {
    std::vector<cd> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      cd s{};
      for (int j = 0; j < n; ++j) s += m(i, j) * x[static_cast<size_t>(j)];
      y[static_cast<size_t>(i)] = s;
    }
    return y;
  };
  auto norm2 = [](const std::vector<cd>& x) {
    double s = 0;
    for (const cd& v : x) s += std::norm(v);
    return std::sqrt(s);
  };
  double best_res = norm2(apply(w));

  // One step of inverse iteration on M^H M through A P = Q R.
  ColPivQr qr = qr_col_pivot(m);
  const double reg = 1e-3 * rank_tol * std::abs(qr.r(0, 0));
  for (int k = 0; k < n; ++k)
    if (std::abs(qr.r(k, k)) < reg) qr.r(k, k) = reg;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<cd> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) y[static_cast<size_t>(i)] = w[static_cast<size_t>(qr.perm[i])];
    // forward solve R^H u = y
    for (int i = 0; i < n; ++i) {
      cd s = y[static_cast<size_t>(i)];
      for (int k = 0; k < i; ++k) s -= std::conj(qr.r(k, i)) * y[static_cast<size_t>(k)];
      y[static_cast<size_t>(i)] = s / std::conj(qr.r(i, i));
    }
    // backward solve R v = u
    for (int i = n - 1; i >= 0; --i) {
      cd s = y[static_cast<size_t>(i)];
      for (int k = i + 1; k < n; ++k) s -= qr.r(i, k) * y[static_cast<size_t>(k)];
      y[static_cast<size_t>(i)] = s / qr.r(i, i);
    }
    std::vector<cd> cand(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cand[static_cast<size_t>(qr.perm[i])] = y[static_cast<size_t>(i)];
    const double nn = norm2(cand);
    if (nn == 0 || !std::isfinite(nn)) break;
    for (cd& v : cand) v /= nn;
    const double res = norm2(apply(cand));
    if (res < best_res) {
      best_res = res;
      w = cand;
    } else {
      break;
    }
  }

  const double wn = norm2(w);
  for (cd& v : w) v /= wn;
  int kmax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(w[static_cast<size_t>(i)]) > std::abs(w[static_cast<size_t>(kmax)])) kmax = i;
  const cd ph = w[static_cast<size_t>(kmax)] / std::abs(w[static_cast<size_t>(kmax)]);
  for (cd& v : w) v *= std::conj(ph);

  if (best_res > 1e-8 * std::max(1.0, smax))
    throw RankDeficiencyMismatch("null vector residual " + std::to_string(best_res));
  return w;
}

// Constant unitary with first column w, built from one elementary reflector.
inline CMatrix unitary_completion(const std::vector<cd>& w) {
  const int n = static_cast<int>(w.size());
  if (n == 0) throw DimensionMismatch("unitary_completion: empty vector");
  double nrm = 0;
  for (const cd& v : w) nrm += std::norm(v);
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-8)
    throw InvalidArgument("unitary_completion: input is not a unit vector");
  const cd w0 = w[0];
  const cd ph = (w0 == cd{}) ? cd{1.0} : w0 / std::abs(w0);
  std::vector<cd> u(w.begin(), w.end());
  u[0] += ph;
  double uu = 0;
  for (const cd& v : u) uu += std::norm(v);
  CMatrix h = CMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(i, j) -= 2.0 * u[static_cast<size_t>(i)] * std::conj(u[static_cast<size_t>(j)]) / uu;
  // H maps e1 to -conj(ph) w; rescale the first column's phase.
  CMatrix v = h;
  for (int i = 0; i < n; ++i) v(i, 0) = h(i, 0) * (-ph);
  return v;
}

struct FlipOptions {
  double boundary_tol = tol::kBoundary;
  double rank_tol = tol::kRank;
  double root_tol = 1e-8;       // |det P(z0)| acceptance, relative
  double remainder_tol = 1e-8;  // synthetic division remainder, relative
  bool allow_rank_deficient = false;  // internal: multiple-root flips
};

namespace detail {

inline std::vector<cd> flip_null_vector(const CMatrix& m, const FlipOptions& opts) {
  if (m.rows() == 1 || opts.allow_rank_deficient) {
    // At a repeated determinant root the null space may have dimension > 1;
    // any unit null vector still yields a valid flip (only uniqueness is
    // lost). Take the smallest right singular vector, canonical phase.
    const Svd svd = jacobi_svd(m);
    const int n = m.rows();
    std::vector<cd> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = svd.v(i, n - 1);
    int kmax = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(w[static_cast<size_t>(i)]) > std::abs(w[static_cast<size_t>(kmax)])) kmax = i;
    const cd ph = w[static_cast<size_t>(kmax)] / std::abs(w[static_cast<size_t>(kmax)]);
    for (cd& v : w) v *= std::conj(ph);
    return w;
  }
  return null_vector(m, opts.rank_tol);
}

}  // namespace detail

// P V U(z): moves the determinant zero at from_zero to 1/conj(from_zero).
inline PolyMatrix flip_zero(const PolyMatrix& p, cd from_zero, const FlipOptions& opts = {}) {
  const int m = p.dim();
  const int deg = p.degree();
  double fmod = std::abs(from_zero);
  if (std::abs(fmod - 1.0) <= opts.boundary_tol)
    throw RootOnCircle("flip zero lies within boundary tolerance of the unit circle");

  const Poly dp = det_poly(p);
  const double bound =
      opts.root_tol * dp.sup_norm() * std::pow(std::max(1.0, fmod), std::max(0, dp.degree()));
  if (std::abs(dp.eval(from_zero)) > bound)
    throw NotARoot("determinant does not vanish at the requested zero (|det| = " +
                   std::to_string(std::abs(dp.eval(from_zero))) + ")");

  // Re-localize the zero on this factor: cascaded flips drift the current
  // determinant root away from the caller's estimate, and the synthetic
  // division needs the root of det P as it now is.
  {
    const Poly ddp = dp.derivative();
    cd cur = from_zero;
    double best = std::abs(dp.eval(cur));
    for (int it = 0; it < 3; ++it) {
      const cd dv = ddp.eval(cur);
      if (std::abs(dv) == 0) break;
      const cd cand = cur - dp.eval(cur) / dv;
      const double res = std::abs(dp.eval(cand));
      if (res >= best || std::abs(cand - from_zero) > 1e-6 * (1.0 + fmod)) break;
      cur = cand;
      best = res;
    }
    from_zero = cur;
    fmod = std::abs(from_zero);
  }

  const std::vector<cd> w = detail::flip_null_vector(p.eval(from_zero), opts);
  const CMatrix v = (m == 1) ? CMatrix::identity(1) : unitary_completion(w);
  const PolyMatrix q = (m == 1) ? p : p.times(v);

  // First column of q vanishes at from_zero; divide it by (z - from_zero)
  // and multiply by |from_zero| (z - to_zero).
  const cd to_zero = 1.0 / std::conj(from_zero);
  std::vector<Poly> col(static_cast<size_t>(m));
  double col_norm = 0;
  for (int i = 0; i < m; ++i) {
    std::vector<cd> e(static_cast<size_t>(deg + 1));
    for (int k = 0; k <= deg; ++k) {
      e[static_cast<size_t>(k)] = q.coeff(k)(i, 0);
      col_norm += std::norm(e[static_cast<size_t>(k)]);
    }
    col[static_cast<size_t>(i)] = Poly(std::move(e), 0.0);
  }
  col_norm = std::sqrt(col_norm);

  double rem_norm = 0;
  std::vector<Poly> flipped(static_cast<size_t>(m));
  const Poly reflected(std::vector<cd>{-to_zero * fmod, cd{fmod}}, 0.0);
  for (int i = 0; i < m; ++i) {
    const LinearDivision div = divide_linear(col[static_cast<size_t>(i)], from_zero);
    rem_norm += std::norm(div.remainder);
    flipped[static_cast<size_t>(i)] = div.quotient * reflected;
  }
  rem_norm = std::sqrt(rem_norm);
  if (rem_norm > opts.remainder_tol * std::max(col_norm, 1e-300))
    throw RemainderTooLarge("synthetic division remainder " + std::to_string(rem_norm) +
                            " against column norm " + std::to_string(col_norm));

  std::vector<CMatrix> out(static_cast<size_t>(deg + 1), CMatrix(m, m));
  for (int k = 0; k <= deg; ++k) {
    for (int i = 0; i < m; ++i) {
      out[static_cast<size_t>(k)](i, 0) = flipped[static_cast<size_t>(i)].coeff(k);
      for (int j = 1; j < m; ++j) out[static_cast<size_t>(k)](i, j) = q.coeff(k)(i, j);
    }
  }
  return PolyMatrix(m, std::move(out));
}

struct FlipStep {
  cd from_zero;
  cd to_zero;  // 1/conj(from_zero)
};

// An ordered batch of reflections, validated on construction.
struct FlipPlan {
  std::vector<FlipStep> steps;

  static FlipPlan make(std::vector<FlipStep> steps, double boundary_tol = tol::kBoundary) {
    for (const FlipStep& s : steps) {
      if (std::abs(std::abs(s.from_zero) - 1.0) <= boundary_tol)
        throw RootOnCircle("flip plan contains a zero on the unit circle");
      if (std::abs(s.to_zero * std::conj(s.from_zero) - 1.0) > 1e-9)
        throw InvalidArgument("flip plan step is not a circle reflection");
    }
    // Decreasing |from_zero|: best-conditioned divisions first.
    std::stable_sort(steps.begin(), steps.end(), [](const FlipStep& a, const FlipStep& b) {
      const double ma = std::abs(a.from_zero), mb = std::abs(b.from_zero);
      if (ma != mb) return ma > mb;
      return std::arg(a.from_zero) < std::arg(b.from_zero);
    });
    FlipPlan plan;
    plan.steps = std::move(steps);
    return plan;
  }
};

inline PolyMatrix apply_flip_plan(const PolyMatrix& p, const FlipPlan& plan,
                                  const FlipOptions& opts = {}) {
  PolyMatrix cur = p;
  for (const FlipStep& s : plan.steps) cur = flip_zero(cur, s.from_zero, opts);
  return cur;
}

// Decides whether two factors differ only by a constant right unitary; when
// they do, returns that unitary.
inline std::optional<CMatrix> equal_up_to_unitary(const PolyMatrix& p1, const PolyMatrix& p2,
                                                  double rel_tol = 1e-7) {
  if (p1.dim() != p2.dim()) throw DimensionMismatch("equal_up_to_unitary dims");
  const int m = p1.dim();
  const int scan = 64;
  double best_score = -1;
  cd best_z{};
  double scale2 = 0;
  for (int j = 0; j < scan; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * (j + 0.5) / scan);
    const Svd s1 = jacobi_svd(p1.eval(z));
    const Svd s2 = jacobi_svd(p2.eval(z));
    scale2 = std::max(scale2, s2.sigma.front());
    const double score = std::min(s1.sigma.back(), s2.sigma.back());
    if (score > best_score) {
      best_score = score;
      best_z = z;
    }
  }
  if (best_score <= 1e-12 * std::max(scale2, 1e-300))
    throw AllSamplesSingular("no well-conditioned circle sample for the unitary quotient");

  const CMatrix u = solve(p2.eval(best_z), p1.eval(best_z));
  if (max_abs_diff(u.adjoint() * u, CMatrix::identity(m)) > rel_tol) return std::nullopt;

  double p2max = 0;
  for (int j = 0; j < 32; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / 32);
    p2max = std::max(p2max, p2.eval(z).frobenius_norm());
  }
  for (int j = 0; j < 32; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / 32);
    if (max_abs_diff(p1.eval(z), p2.eval(z) * u) > rel_tol * p2max) return std::nullopt;
  }
  return u;
}

struct DetFactorOptions {
  BauerOptions bauer{};
  FlipOptions flip{};
  double det_tol = 1e-8;      // p * tilde(p) vs det S acceptance, relative
  double residual_tol = 1e-8; // final P * tilde(P) vs S acceptance, relative
};

struct DetFactorResult {
  PolyMatrix factor;
  bool multiple_root_warning = false;  // uniqueness not guaranteed (repeated det roots)
};

namespace detail {

// Flip plan turning the optimal factor's determinant roots into p's roots:
// for every reflected pair of det S, as many copies of the outside root are
// flipped inward as p holds copies of the inside root.
inline FlipPlan plan_from_scalar_factor(const SymmetricRoots& cls, const Poly& p,
                                        double boundary_tol) {
  const RootSet proots = find_roots(p);
  std::vector<FlipStep> steps;
  std::vector<int> claimed(cls.pairs.size(), 0);
  int matched = 0;
  for (const Root& r : proots.roots) {
    bool found = false;
    for (size_t i = 0; i < cls.pairs.size(); ++i) {
      const RootPair& pair = cls.pairs[i];
      const double tol_in = 1e-6 * (1.0 + std::abs(pair.inside));
      const double tol_out = 1e-6 * (1.0 + std::abs(pair.outside));
      if (std::abs(r.location - pair.inside) <= tol_in) {
        claimed[i] += r.multiplicity;
        for (int c = 0; c < r.multiplicity; ++c)
          steps.push_back({pair.outside, 1.0 / std::conj(pair.outside)});
        matched += r.multiplicity;
        found = true;
        break;
      }
      if (std::abs(r.location - pair.outside) <= tol_out) {
        matched += r.multiplicity;
        found = true;
        break;
      }
    }
    if (!found) {
      bool circle = false;
      for (const CircleRoot& c : cls.circle)
        if (std::abs(r.location - c.location) <= 1e-5) circle = true;
      if (!circle)
        throw DeterminantMismatch("scalar factor root is not a determinant root of S");
      matched += r.multiplicity;
    }
  }
  for (size_t i = 0; i < cls.pairs.size(); ++i)
    if (claimed[i] > cls.pairs[i].multiplicity)
      throw DeterminantMismatch("scalar factor selects a root more often than its multiplicity");
  return FlipPlan::make(std::move(steps), boundary_tol);
}

}  // namespace detail

// The preassigned-determinant construction with an explicit starting
// optimal factor (used to exercise uniqueness across different starts).
inline DetFactorResult factor_with_determinant_from(const PolyMatrix& optimal_start,
                                                    const LaurentMatrix& s, const Poly& p,
                                                    const DetFactorOptions& opts = {}) {
  const LaurentPoly sdet = det_laurent(s);
  const LaurentPoly pp = self_product(p);
  if ((pp - sdet).sup_norm() > opts.det_tol * std::max(sdet.sup_norm(), 1e-300))
    throw DeterminantMismatch("p * tilde(p) does not reproduce det S");

  const SymmetricRoots cls = classify_symmetric_roots(sdet, opts.flip.boundary_tol);
  DetFactorResult out;
  out.multiple_root_warning = false;
  for (const RootPair& pr : cls.pairs)
    if (pr.multiplicity != 1) out.multiple_root_warning = true;

  const FlipPlan plan = detail::plan_from_scalar_factor(cls, p, opts.flip.boundary_tol);
  FlipOptions fo = opts.flip;
  fo.allow_rank_deficient = out.multiple_root_warning;
  out.factor = apply_flip_plan(optimal_start, plan, fo);

  const double resid = (mul_factor(out.factor) - s).sup_norm();
  if (resid > opts.residual_tol * std::max(s.sup_norm(), 1e-300))
    throw ResidualCheckFailed("factor residual " + std::to_string(resid));
  if (!match_up_to_czk(det_poly(out.factor), p, 1e-7))
    throw ResidualCheckFailed("achieved determinant does not match the requested factor");
  return out;
}

// A spectral factor of S whose determinant is the
// given scalar factor p of det S (up to c z^k with |c| = 1).
inline DetFactorResult factor_with_determinant(const LaurentMatrix& s, const Poly& p,
                                               const DetFactorOptions& opts = {}) {
  return factor_with_determinant_from(bauer_factor(s, opts.bauer), s, p, opts);
}

struct EnumeratedFactor {
  FactorSelection selection;
  PolyMatrix factor;
};

// All 2^L spectral factors of S (simple determinant roots, none on the
// circle), ordered by selection mask; mask 0 is the optimal factor.
inline std::vector<EnumeratedFactor> enumerate_matrix_factors(const LaurentMatrix& s,
                                                               const DetFactorOptions& opts = {},
                                                               int max_l = 24) {
  const LaurentPoly sdet = det_laurent(s);
  const std::vector<RootPair> pairs = pair_symmetric(sdet, opts.flip.boundary_tol);
  if (!all_simple(pairs))
    throw SimpleRootsRequired("matrix factor enumeration requires simple determinant roots");
  const int l = static_cast<int>(pairs.size());
  if (l > max_l)
    throw ResourceLimit("enumeration over 2^" + std::to_string(l) + " factors refused");

  const PolyMatrix s_plus = bauer_factor(s, opts.bauer);
  std::vector<EnumeratedFactor> out;
  out.reserve(static_cast<size_t>(1) << l);
  for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << l); ++mask) {
    FactorSelection sel = FactorSelection::from_mask(mask, l);
    std::vector<FlipStep> steps;
    for (int i = 0; i < l; ++i)
      if (sel.inside(static_cast<size_t>(i)))
        steps.push_back({pairs[static_cast<size_t>(i)].outside,
                         1.0 / std::conj(pairs[static_cast<size_t>(i)].outside)});
    const PolyMatrix f = apply_flip_plan(s_plus, FlipPlan::make(std::move(steps)), opts.flip);
    const double resid = (mul_factor(f) - s).sup_norm();
    if (resid > opts.residual_tol * std::max(s.sup_norm(), 1e-300))
      throw ResidualCheckFailed("enumerated factor residual " + std::to_string(resid));
    out.push_back({std::move(sel), f});
  }
  return out;
}

}  // namespace specfact

#endif  // SPECFACT_ZERO_FLIP_HPP
