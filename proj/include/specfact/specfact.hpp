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

#ifndef SPECFACT_SPECFACT_HPP
#define SPECFACT_SPECFACT_HPP

#include "specfact/bauer.hpp"
#include "specfact/cmatrix.hpp"
#include "specfact/errors.hpp"
#include "specfact/json_io.hpp"
#include "specfact/laurent.hpp"
#include "specfact/linalg.hpp"
#include "specfact/poly.hpp"
#include "specfact/rootfind.hpp"
#include "specfact/scalar_fejer.hpp"
#include "specfact/tolerances.hpp"
#include "specfact/verify.hpp"
#include "specfact/wavelet.hpp"
#include "specfact/zero_flip.hpp"

#endif  // SPECFACT_SPECFACT_HPP
