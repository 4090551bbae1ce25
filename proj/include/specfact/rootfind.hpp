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

// Polynomial root finding by Aberth-Ehrlich simultaneous iteration, root
// clustering into multiplicities, and the pairing of roots of para-Hermitian
// Laurent polynomials into (inside, outside) unit-circle reflections.

#ifndef SPECFACT_ROOTFIND_HPP
#define SPECFACT_ROOTFIND_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "specfact/errors.hpp"
#include "specfact/poly.hpp"
#include "specfact/tolerances.hpp"

namespace specfact {

struct Root {
  cd location;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;

  int total_multiplicity() const {
    int s = 0;
    for (const Root& r : roots) s += r.multiplicity;
    return s;
  }
};

struct RootFindOptions {
  double tol = 1e-12;        // residual acceptance, relative to sup|coeff|
  int max_iterations = 500;
  double cluster_tol = tol::kCluster;
};

namespace detail {

inline bool roots_sort_key(const Root& a, const Root& b) {
  const double ma = std::abs(a.location), mb = std::abs(b.location);
  if (ma != mb) return ma < mb;
  return std::arg(a.location) < std::arg(b.location);
}

// Union-find over root iterates; two iterates join when their inclusion
// disks overlap. Disk radius blends the configured cluster tolerance with
// the n*|p/p'| bound, so tight multiple-root clouds merge reliably.
struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

inline RootSet find_roots(const Poly& p, const RootFindOptions& opts = {}) {
  if (p.is_zero()) throw InvalidArgument("find_roots: zero polynomial");
  Poly q = p;
  q.trim();
  RootSet out;
  if (q.degree() <= 0) return out;

  // Deflate exact zeros at the origin.
  std::vector<cd> c = q.coeffs();
  int origin_mult = 0;
  while (c.size() > 1 && c.front() == cd{}) {
    c.erase(c.begin());
    ++origin_mult;
  }
  const int n = static_cast<int>(c.size()) - 1;
  if (origin_mult > 0) out.roots.push_back({cd{}, origin_mult});
  if (n == 0) {
    std::sort(out.roots.begin(), out.roots.end(), detail::roots_sort_key);
    return out;
  }
  const Poly poly(std::vector<cd>(c), 0.0);
  const Poly dpoly = poly.derivative();
  const double pnorm = poly.sup_norm();

  // Perturbed-circle start points.
  double rho = std::pow(std::abs(c.front() / c.back()), 1.0 / n);
  if (!std::isfinite(rho) || rho == 0) rho = 1.0;
  std::vector<cd> z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = rho * (0.9 + 0.2 * (i + 0.5) / n);
    z[static_cast<size_t>(i)] = std::polar(r, 2.0 * std::numbers::pi * i / n + 0.41);
  }

  std::vector<bool> frozen(static_cast<size_t>(n), false);
  auto residual_bound = [&](cd r) {
    return opts.tol * pnorm * std::pow(std::max(1.0, std::abs(r)), n);
  };
  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_done = true;
    double max_step = 0;
    for (int i = 0; i < n; ++i) {
      if (frozen[static_cast<size_t>(i)]) continue;
      const cd zi = z[static_cast<size_t>(i)];
      const cd pv = poly.eval(zi);
      if (std::abs(pv) <= residual_bound(zi)) {
        frozen[static_cast<size_t>(i)] = true;
        continue;
      }
      all_done = false;
      cd dv = dpoly.eval(zi);
      if (dv == cd{}) dv = cd{1e-300};
      const cd w = pv / dv;
      cd repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        cd diff = zi - z[static_cast<size_t>(j)];
        if (diff == cd{}) diff = cd{1e-14, 1e-14};
        repulsion += 1.0 / diff;
      }
      cd denom = 1.0 - w * repulsion;
      if (std::abs(denom) < 1e-12) denom = 1.0;
      const cd step = w / denom;
      z[static_cast<size_t>(i)] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(zi)));
    }
    if (all_done || (max_step != 0 && max_step < 1e-15)) break;
    if (max_step == 0 && !all_done) break;  // stalled
  }

  double worst = 0;
  for (int i = 0; i < n; ++i) {
    const double res = std::abs(poly.eval(z[static_cast<size_t>(i)]));
    const double bound = residual_bound(z[static_cast<size_t>(i)]);
    if (bound > 0) worst = std::max(worst, res / bound);
  }
  if (worst > 1.0) {
    std::ostringstream msg;
    msg << "aberth iteration did not meet the residual bound after " << iter
        << " iterations (worst residual ratio " << worst << ")";
    throw NoConvergence(msg.str());
  }

  // Cluster into multiplicities. A multiplicity-mu cloud spreads like
  // eps^(1/mu), so the inclusion disks (Newton bound n|p/p'|, doubled for
  // margin) must be allowed to grow well past the simple-root scale.
  detail::DisjointSet ds(static_cast<size_t>(n));
  std::vector<double> radius(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const cd zi = z[static_cast<size_t>(i)];
    const double scale = 1.0 + std::abs(zi);
    const cd dv = dpoly.eval(zi);
    double incl = scale * 2e-2;
    if (std::abs(dv) > 0) incl = std::min(incl, 2.0 * n * std::abs(poly.eval(zi) / dv));
    radius[static_cast<size_t>(i)] = std::max(opts.cluster_tol * scale, incl);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]) <=
          radius[static_cast<size_t>(i)] + radius[static_cast<size_t>(j)])
        ds.unite(i, j);

  struct Cluster {
    cd centroid;
    double spread = 0;
    int mult = 0;
  };
  auto collect = [&] {
    std::vector<Cluster> cs;
    for (int rep = 0; rep < n; ++rep) {
      if (ds.find(rep) != rep) continue;
      Cluster c;
      for (int i = 0; i < n; ++i)
        if (ds.find(i) == rep) {
          c.centroid += z[static_cast<size_t>(i)];
          ++c.mult;
        }
      c.centroid /= static_cast<double>(c.mult);
      for (int i = 0; i < n; ++i)
        if (ds.find(i) == rep)
          c.spread = std::max(c.spread, std::abs(z[static_cast<size_t>(i)] - c.centroid));
      cs.push_back(c);
    }
    return cs;
  };

  // Coalesce partially merged clouds: clusters whose centroids sit within
  // each other's spreads belong together. Iterate to a fixpoint.
  std::vector<Cluster> clusters = collect();
  for (int pass = 0; pass < n; ++pass) {
    bool changed = false;
    // representatives per cluster for union-find bookkeeping
    std::vector<int> reps;
    for (int rep = 0; rep < n; ++rep)
      if (ds.find(rep) == rep) reps.push_back(rep);
    clusters = collect();
    for (size_t a = 0; a < clusters.size(); ++a)
      for (size_t b = a + 1; b < clusters.size(); ++b) {
        const double base =
            opts.cluster_tol * (1.0 + std::abs(clusters[a].centroid));
        if (std::abs(clusters[a].centroid - clusters[b].centroid) <=
            2.0 * (clusters[a].spread + clusters[b].spread) + base) {
          ds.unite(reps[a], reps[b]);
          changed = true;
        }
      }
    if (!changed) break;
  }
  clusters = collect();

  for (const Cluster& c : clusters) {
    // A multiplicity-mu root is a simple root of the (mu-1)-th derivative;
    // Newton there reaches eps-level accuracy instead of the eps^(1/mu)
    // spread of the cloud itself.
    cd polished = c.centroid;
    Poly target = poly;
    for (int d = 1; d < c.mult; ++d) target = target.derivative();
    const Poly dtarget = target.derivative();
    if (!dtarget.is_zero()) {
      cd cur = c.centroid;
      bool ok = true;
      for (int it = 0; it < 25; ++it) {
        const cd dv = dtarget.eval(cur);
        if (dv == cd{}) {
          ok = false;
          break;
        }
        const cd step = target.eval(cur) / dv;
        cur -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(cur))) break;
      }
      const double leash = 10.0 * c.spread + opts.cluster_tol * (1.0 + std::abs(c.centroid));
      if (ok && std::abs(cur - c.centroid) <= leash &&
          std::abs(target.eval(cur)) <= std::abs(target.eval(c.centroid)))
        polished = cur;
    }
    out.roots.push_back({polished, c.mult});
  }
  std::sort(out.roots.begin(), out.roots.end(), detail::roots_sort_key);
  return out;
}

struct RootPair {
  cd inside;   // |inside| < 1
  cd outside;  // 1/conj(inside)
  int multiplicity = 1;
};

struct CircleRoot {
  cd location;  // projected onto |z| = 1
  int multiplicity = 1;
};

struct SymmetricRoots {
  std::vector<RootPair> pairs;
  std::vector<CircleRoot> circle;

  int pair_slots() const {
    int s = 0;
    for (const RootPair& p : pairs) s += p.multiplicity;
    return s;
  }
};

// Roots of a para-Hermitian s >= 0 on the circle, split into reflected
// (inside, outside) pairs plus even-multiplicity circle roots.
inline SymmetricRoots classify_symmetric_roots(const LaurentPoly& s,
                                               double boundary_tol = tol::kBoundary,
                                               const RootFindOptions& opts = {}) {
  if (!s.is_para_hermitian())
    throw NotParaHermitian("root pairing requires a para-Hermitian Laurent polynomial");
  if (s.is_zero()) throw InvalidArgument("root pairing: zero input");
  double smin = 0, smax = 0;
  for (int j = 0; j < 512; ++j) {
    const double v = s.eval_real_on_circle(2.0 * std::numbers::pi * j / 512);
    smin = std::min(smin, v);
    smax = std::max(smax, std::abs(v));
  }
  if (smin < -1e-9 * smax)
    throw NotNonnegativeOnCircle("sampled circle minimum " + std::to_string(smin));

  SymmetricRoots out;
  LaurentPoly st = s;
  st.trim();
  if (st.degree() == 0) return out;

  const RootSet rs = find_roots(st.to_poly(), opts);
  std::vector<Root> inside, outside;
  for (const Root& r : rs.roots) {
    const double mod = std::abs(r.location);
    if (std::abs(mod - 1.0) < boundary_tol)
      out.circle.push_back({r.location / mod, r.multiplicity});
    else if (mod < 1.0)
      inside.push_back(r);
    else
      outside.push_back(r);
  }

  std::vector<bool> used(outside.size(), false);
  for (const Root& a : inside) {
    const cd expect = 1.0 / std::conj(a.location);
    int match = -1;
    double best = std::numeric_limits<double>::max();
    for (size_t j = 0; j < outside.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(outside[j].location - expect);
      if (d < best) {
        best = d;
        match = static_cast<int>(j);
      }
    }
    if (match < 0 || best > 1e-6 * (1.0 + std::abs(expect)))
      throw UnpairedRoot("no reflected partner for root near " + std::to_string(a.location.real()) +
                         "+" + std::to_string(a.location.imag()) + "i");
    const Root& b = outside[static_cast<size_t>(match)];
    if (b.multiplicity != a.multiplicity)
      throw UnpairedRoot("reflected partners with different multiplicities");
    if (std::abs(b.location * std::conj(a.location) - 1.0) > 1e-6)
      throw UnpairedRoot("reflection identity violated beyond tolerance");
    used[static_cast<size_t>(match)] = true;
    // det S of a para-Hermitian S has exactly reflection-symmetric roots;
    // average the two independent estimates and resymmetrize, so the pair
    // satisfies outside * conj(inside) = 1 to within rounding.
    const cd inside_est = 0.5 * (a.location + 1.0 / std::conj(b.location));
    out.pairs.push_back({inside_est, 1.0 / std::conj(inside_est), a.multiplicity});
  }
  for (size_t j = 0; j < outside.size(); ++j)
    if (!used[j]) throw UnpairedRoot("outside root without an inside partner");

  std::sort(out.pairs.begin(), out.pairs.end(), [](const RootPair& a, const RootPair& b) {
    const double ma = std::abs(a.inside), mb = std::abs(b.inside);
    if (ma != mb) return ma < mb;
    return std::arg(a.inside) < std::arg(b.inside);
  });
  return out;
}

// Strict form: any circle root is an error (RootOnCircle).
inline std::vector<RootPair> pair_symmetric(const LaurentPoly& s,
                                            double boundary_tol = tol::kBoundary,
                                            const RootFindOptions& opts = {}) {
  SymmetricRoots cls = classify_symmetric_roots(s, boundary_tol, opts);
  if (!cls.circle.empty())
    throw RootOnCircle("determinant has a root within boundary tolerance of the unit circle");
  return cls.pairs;
}

inline bool all_simple(const std::vector<RootPair>& pairs) {
  for (const RootPair& p : pairs)
    if (p.multiplicity != 1) return false;
  return true;
}

}  // namespace specfact

#endif  // SPECFACT_ROOTFIND_HPP
