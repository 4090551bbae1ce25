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

// Daubechies half-band product filters and their spectral factors: the
// scalar showcase for selecting among the 2^(K-1) factorizations.
//
// The product filter splits as s = [(2+z+1/z)/4]^K * 2 * B(z) where B is the
// binomial-series remainder, strictly positive on the circle. Factors take
// the K circle zeros at z = -1 half each (forced), so design choices live
// entirely in B's K-1 reflected root pairs.

#ifndef SPECFACT_WAVELET_HPP
#define SPECFACT_WAVELET_HPP

#include <cmath>
#include <string>
#include <vector>

#include "specfact/errors.hpp"
#include "specfact/poly.hpp"
#include "specfact/scalar_fejer.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

namespace detail {

inline double binomial(int n, int k) {
  double v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

// B(z) = sum_{k<K} C(K-1+k, k) [(2 - z - 1/z)/4]^k
inline LaurentPoly daubechies_remainder(int K) {
  const LaurentPoly y(1, {cd{-0.25}, cd{0.5}, cd{-0.25}});
  LaurentPoly acc = LaurentPoly::constant(binomial(K - 1, 0));
  LaurentPoly ypow = LaurentPoly::constant(1.0);
  for (int k = 1; k < K; ++k) {
    ypow = ypow * y;
    acc = acc + ypow * cd{binomial(K - 1 + k, k)};
  }
  return acc;
}

}  // namespace detail

// The order-K autocorrelation (product) filter: value 2 at z = 1, zero of
// multiplicity 2K at z = -1, Laurent degree 2K-1. The coefficients are
// interpolated from pointwise circle values, which are sums of nonnegative
// terms and therefore free of the cancellation that builds up when the
// binomial remainder is multiplied out in coefficient space.
inline LaurentPoly daubechies_product(int K) {
  if (K < 1 || K > 12) throw InvalidArgument("daubechies order K must be in 1..12");
  const int l = 2 * K - 1;
  const int samples = 2 * l + 1;
  auto value = [&](double theta) {
    const double c2 = std::cos(theta / 2) * std::cos(theta / 2);
    const double s2 = std::sin(theta / 2) * std::sin(theta / 2);
    double acc = 0, s2p = 1;
    for (int k = 0; k < K; ++k) {
      acc += detail::binomial(K - 1 + k, k) * s2p;
      s2p *= s2;
    }
    return 2.0 * std::pow(c2, K) * acc;
  };
  std::vector<cd> coeffs(static_cast<size_t>(2 * l + 1));
  for (int n = 0; n <= l; ++n) {
    double re = 0;
    for (int j = 0; j < samples; ++j) {
      const double th = 2.0 * std::numbers::pi * j / samples;
      re += value(th) * std::cos(n * th);  // the filter is real and even
    }
    re /= samples;
    coeffs[static_cast<size_t>(l + n)] = re;
    coeffs[static_cast<size_t>(l - n)] = re;
  }
  return LaurentPoly(l, std::move(coeffs));
}

enum class FilterMode { min_phase, mid_phase, balanced, selection };

inline FilterMode filter_mode_from_string(const std::string& s) {
  if (s == "min-phase" || s == "min_phase") return FilterMode::min_phase;
  if (s == "mid-phase" || s == "mid_phase") return FilterMode::mid_phase;
  if (s == "balanced") return FilterMode::balanced;
  if (s == "selection") return FilterMode::selection;
  throw InvalidArgument("unknown filter mode '" + s + "'");
}

// Orthonormal lowpass filter h with h * tilde(h) equal to the product
// filter, K zeros at z = -1, free pairs per mode, and h(1) = sqrt(2) > 0.
inline Poly design_filter(int K, FilterMode mode, const FactorSelection* sel = nullptr,
                          double boundary_tol = tol::kBoundary) {
  if (K < 1 || K > 12) throw InvalidArgument("daubechies order K must be in 1..12");
  const LaurentPoly b = detail::daubechies_remainder(K);
  const SymmetricRoots cls = classify_symmetric_roots(b, boundary_tol);
  if (!cls.circle.empty())
    throw RootOnCircle("daubechies remainder unexpectedly has circle roots");
  const int slots = cls.pair_slots();

  Poly g;
  switch (mode) {
    case FilterMode::min_phase:
      g = scalar_factor(b, FactorSelection::all_outside(slots), boundary_tol);
      break;
    case FilterMode::balanced:
      g = scalar_factor(b, balanced_selection(slots), boundary_tol);
      break;
    case FilterMode::selection: {
      if (sel == nullptr) throw InvalidArgument("selection mode needs an explicit selection");
      g = scalar_factor(b, *sel, boundary_tol);
      break;
    }
    case FilterMode::mid_phase: {
      // Score the complete filter, not just the free part; the (1+z)^K
      // half adds only a constant K/2 to the group delay but settles exact
      // ties the same way scoring h does.
      for (const RootPair& p : cls.pairs)
        if (p.multiplicity != 1) throw SimpleRootsRequired("mid-phase needs simple free pairs");
      if (slots > 24) throw ResourceLimit("mid-phase search too large");
      const Poly half = Poly::from_roots(1.0, std::vector<cd>(static_cast<size_t>(K), cd{-1.0}));
      Poly best;
      double best_score = 0;
      std::string best_bits;
      bool have = false;
      for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << slots); ++mask) {
        const FactorSelection cand = FactorSelection::from_mask(mask, slots);
        const Poly gc = scalar_factor(b, cand, boundary_tol);
        const double score = group_delay_variance(half * gc);
        const std::string bits = cand.to_string();
        if (!have || score < best_score || (score == best_score && bits < best_bits)) {
          best = gc;
          best_score = score;
          best_bits = bits;
          have = true;
        }
      }
      g = best;
      break;
    }
  }

  const Poly half = Poly::from_roots(1.0, std::vector<cd>(static_cast<size_t>(K), cd{-1.0}));
  Poly h = half * g * cd{std::sqrt(2.0) * std::pow(2.0, -K)};
  const cd at_one = h.eval(cd{1.0});
  if (std::abs(at_one) == 0) throw ResidualCheckFailed("designed filter vanishes at z = 1");
  h *= std::sqrt(2.0) / at_one;  // unimodular phase: sum of taps = sqrt(2) > 0
  return h;
}

// Group-delay variance of h over the circle; zero for linear phase, and
// invariant under h -> c z^k h with |c| = 1.
inline double symmetry_score(const Poly& h, int samples = 256) {
  return group_delay_variance(h, samples);
}

}  // namespace specfact

#endif  // SPECFACT_WAVELET_HPP
