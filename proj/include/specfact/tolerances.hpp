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

#ifndef SPECFACT_TOLERANCES_HPP
#define SPECFACT_TOLERANCES_HPP

namespace specfact::tol {

// Relative cutoff for dropping leading/trailing coefficients.
inline constexpr double kTrim = 1e-12;

// Roots with | |r| - 1 | below this count as lying on the unit circle.
inline constexpr double kBoundary = 1e-6;

// Base relative radius for merging root clusters into multiplicities.
inline constexpr double kCluster = 1e-8;

// sigma_min/sigma_max threshold for the rank-(m-1) test.
inline constexpr double kRank = 1e-8;

// Relative tolerance for the para-Hermitian symmetry check.
inline constexpr double kParaHermitian = 1e-9;

// Default relative residual for factorization verification.
inline constexpr double kResidual = 1e-8;

}  // namespace specfact::tol

#endif  // SPECFACT_TOLERANCES_HPP
