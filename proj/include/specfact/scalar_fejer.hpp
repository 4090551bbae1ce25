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

// Scalar spectral factorization: p * tilde(p) = s with the root of each
// reflected pair chosen freely, enumeration of all 2^L factors, and the
// minimum-phase / mid-phase selectors.
//
// A selection assigns one bit per pair slot (pairs expanded by multiplicity,
// in the deterministic pair order): bit set takes the inside root, bit clear
// the outside root. Circle roots are not selectable; they carry half their
// multiplicity into every factor.

#ifndef SPECFACT_SCALAR_FEJER_HPP
#define SPECFACT_SCALAR_FEJER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "specfact/errors.hpp"
#include "specfact/poly.hpp"
#include "specfact/rootfind.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

class FactorSelection {
 public:
  FactorSelection() = default;
  explicit FactorSelection(std::vector<bool> bits) : bits_(std::move(bits)) {}

  static FactorSelection all_outside(int slots) {
    return FactorSelection(std::vector<bool>(static_cast<size_t>(slots), false));
  }
  static FactorSelection from_mask(std::uint64_t mask, int slots) {
    std::vector<bool> b(static_cast<size_t>(slots));
    for (int i = 0; i < slots; ++i) b[static_cast<size_t>(i)] = (mask >> i) & 1u;
    return FactorSelection(std::move(b));
  }

  size_t size() const { return bits_.size(); }
  bool inside(size_t slot) const { return bits_[slot]; }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (bool b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }

  friend bool operator==(const FactorSelection& a, const FactorSelection& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

namespace detail {

// Chosen factor roots for a selection: one root per pair slot plus half of
// every circle multiplicity. Throws on length mismatch or odd circle roots.
inline std::vector<cd> selected_roots(const SymmetricRoots& cls, const FactorSelection& sel) {
  if (static_cast<int>(sel.size()) != cls.pair_slots())
    throw InvalidArgument("selection length " + std::to_string(sel.size()) +
                          " does not match " + std::to_string(cls.pair_slots()) + " pair slots");
  std::vector<cd> roots;
  size_t slot = 0;
  for (const RootPair& p : cls.pairs)
    for (int copy = 0; copy < p.multiplicity; ++copy, ++slot)
      roots.push_back(sel.inside(slot) ? p.inside : p.outside);
  for (const CircleRoot& c : cls.circle) {
    if (c.multiplicity % 2 != 0)
      throw RootOnCircle("circle root with odd multiplicity cannot be split");
    for (int copy = 0; copy < c.multiplicity / 2; ++copy) roots.push_back(c.location);
  }
  return roots;
}

// Positive constant making |c * q|^2 = s on the circle, fitted at the
// best-conditioned sample (where |s| peaks).
inline Poly scale_factor_to(const LaurentPoly& s, const Poly& monic) {
  double best_theta = 0, best_val = -1;
  for (int j = 0; j < 512; ++j) {
    const double th = 2.0 * std::numbers::pi * j / 512;
    const double v = s.eval_real_on_circle(th);
    if (v > best_val) {
      best_val = v;
      best_theta = th;
    }
  }
  if (best_val <= 0) throw NotNonnegativeOnCircle("input vanishes on the whole sample grid");
  const double qv = std::abs(monic.eval(unit_circle_point(best_theta)));
  return monic * cd{std::sqrt(best_val) / qv};
}

inline void verify_scalar_factor(const LaurentPoly& s, const Poly& p) {
  double smax = 0, worst = 0;
  for (int j = 0; j < 64; ++j) {
    const double th = 2.0 * std::numbers::pi * j / 64;
    smax = std::max(smax, std::abs(s.eval_real_on_circle(th)));
  }
  for (int j = 0; j < 64; ++j) {
    const double th = 2.0 * std::numbers::pi * j / 64;
    const double pv = std::norm(p.eval(unit_circle_point(th)));
    worst = std::max(worst, std::abs(pv - s.eval_real_on_circle(th)));
  }
  if (worst > 1e-8 * std::max(smax, 1e-300))
    throw ResidualCheckFailed("scalar factor residual " + std::to_string(worst / smax));
}

}  // namespace detail

// p(z) with p * tilde(p) = s, roots chosen per selection, leading
// coefficient positive real.
inline Poly scalar_factor(const LaurentPoly& s, const FactorSelection& sel,
                          double boundary_tol = tol::kBoundary,
                          const RootFindOptions& opts = {}) {
  const SymmetricRoots cls = classify_symmetric_roots(s, boundary_tol, opts);
  const std::vector<cd> roots = detail::selected_roots(cls, sel);
  const Poly p = detail::scale_factor_to(s, Poly::from_roots(1.0, roots));
  detail::verify_scalar_factor(s, p);
  return p;
}

// All 2^L spectral factors, ordered by selection mask (bit i = pair i).
inline std::vector<Poly> enumerate_scalar(const LaurentPoly& s,
                                          double boundary_tol = tol::kBoundary,
                                          const RootFindOptions& opts = {}) {
  const std::vector<RootPair> pairs = pair_symmetric(s, boundary_tol, opts);
  if (!all_simple(pairs))
    throw SimpleRootsRequired("enumeration requires simple determinant roots");
  const int l = static_cast<int>(pairs.size());
  if (l > 24) throw ResourceLimit("enumeration over 2^" + std::to_string(l) + " selections");
  SymmetricRoots cls;
  cls.pairs = pairs;
  std::vector<Poly> out;
  out.reserve(static_cast<size_t>(1) << l);
  for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << l); ++mask) {
    const Poly p =
        detail::scale_factor_to(s, Poly::from_roots(1.0, detail::selected_roots(cls, FactorSelection::from_mask(mask, l))));
    detail::verify_scalar_factor(s, p);
    out.push_back(p);
  }
  return out;
}

// The factor with no roots in the open unit disk (all-outside selection).
inline Poly min_phase(const LaurentPoly& s, double boundary_tol = tol::kBoundary,
                      const RootFindOptions& opts = {}) {
  const SymmetricRoots cls = classify_symmetric_roots(s, boundary_tol, opts);
  return scalar_factor(s, FactorSelection::all_outside(cls.pair_slots()), boundary_tol, opts);
}

// Group-delay d(arg p)/d(theta) evaluated as Re(z p'(z)/p(z)); samples where
// |p| vanishes (circle zeros) are skipped. Variance over the sample grid.
inline double group_delay_variance(const Poly& p, int samples = 256) {
  if (p.is_zero()) throw InvalidArgument("group delay of the zero polynomial");
  const Poly dp = p.derivative();
  double pmax = 0;
  for (int j = 0; j < samples; ++j)
    pmax = std::max(pmax, std::abs(p.eval(unit_circle_point(2.0 * std::numbers::pi * j / samples))));
  std::vector<double> tau;
  tau.reserve(static_cast<size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    const cd z = unit_circle_point(2.0 * std::numbers::pi * j / samples);
    const cd pv = p.eval(z);
    if (std::abs(pv) <= 1e-9 * pmax) continue;
    tau.push_back((z * dp.eval(z) / pv).real());
  }
  if (tau.empty()) return 0.0;
  double mean = 0;
  for (double t : tau) mean += t;
  mean /= static_cast<double>(tau.size());
  double var = 0;
  for (double t : tau) var += (t - mean) * (t - mean);
  return var / static_cast<double>(tau.size());
}

struct ScoredSelection {
  FactorSelection selection;
  Poly factor;
  double score = 0;
};

namespace detail {

// Exhaustive group-delay scoring over the 2^L selections; ties go to the
// lexicographically smallest bit string.
inline ScoredSelection best_phase_selection(const LaurentPoly& s, const SymmetricRoots& cls,
                                            int gd_samples = 256) {
  for (const RootPair& p : cls.pairs)
    if (p.multiplicity != 1)
      throw SimpleRootsRequired("mid-phase search requires simple pairs");
  const int l = cls.pair_slots();
  if (l > 24) throw ResourceLimit("mid-phase search over 2^" + std::to_string(l) + " selections");
  ScoredSelection best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << l); ++mask) {
    FactorSelection sel = FactorSelection::from_mask(mask, l);
    const Poly p = scale_factor_to(s, Poly::from_roots(1.0, selected_roots(cls, sel)));
    const double score = group_delay_variance(p, gd_samples);
    const bool better =
        !have || score < best.score ||
        (score == best.score && sel.to_string() < best.selection.to_string());
    if (better) {
      best = {std::move(sel), p, score};
      have = true;
    }
  }
  return best;
}

}  // namespace detail

// The selection minimizing group-delay variance over the circle.
inline Poly mid_phase(const LaurentPoly& s, double boundary_tol = tol::kBoundary,
                      const RootFindOptions& opts = {}) {
  const SymmetricRoots cls = classify_symmetric_roots(s, boundary_tol, opts);
  const Poly p = detail::best_phase_selection(s, cls).factor;
  detail::verify_scalar_factor(s, p);
  return p;
}

// The raw balanced-count alternative: floor(L/2) pairs taken inside. Among
// the count-optimal selections this bit string is the lexicographically
// smallest (ones packed at the end).
inline FactorSelection balanced_selection(int slots) {
  std::vector<bool> bits(static_cast<size_t>(slots), false);
  for (int i = slots - slots / 2; i < slots; ++i) bits[static_cast<size_t>(i)] = true;
  return FactorSelection(std::move(bits));
}

inline Poly balanced_phase(const LaurentPoly& s, double boundary_tol = tol::kBoundary,
                           const RootFindOptions& opts = {}) {
  const SymmetricRoots cls = classify_symmetric_roots(s, boundary_tol, opts);
  return scalar_factor(s, balanced_selection(cls.pair_slots()), boundary_tol, opts);
}

}  // namespace specfact

#endif  // SPECFACT_SCALAR_FEJER_HPP
