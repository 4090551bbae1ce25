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

// The on-disk JSON schema:
//   {"m": int, "N": int, "kind": "laurent"|"poly",
//    "coeffs": {"<index>": [[[re,im], ...], ...], ...}}
// Complex entries are [re, im] pairs; indices run -N..N for "laurent" and
// 0..N for "poly", every index present. Serialization is canonical: parse
// followed by dump is byte-identical.

#ifndef SPECFACT_JSON_IO_HPP
#define SPECFACT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "specfact/errors.hpp"
#include "specfact/laurent.hpp"
#include "specfact/rootfind.hpp"
#include "specfact/verify.hpp"

namespace specfact {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(cd v) { return json::array({v.real(), v.imag()}); }

inline cd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex entry must be a [re, im] number pair");
  const cd v{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(v)) throw ParseError("non-finite complex entry");
  return v;
}

inline json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CMatrix matrix_from_json(const json& j, int m) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw ParseError("coefficient must be an m x m array");
  CMatrix out(m, m);
  for (int i = 0; i < m; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(i)].size()) != m)
      throw ParseError("coefficient row has wrong length");
    for (int k = 0; k < m; ++k)
      out(i, k) = complex_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  }
  return out;
}

inline std::pair<int, int> parse_header(const json& j, const char* kind) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  for (const char* key : {"m", "N", "kind", "coeffs"})
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  if (!j["kind"].is_string() || j["kind"].get<std::string>() != kind)
    throw ParseError(std::string("expected kind '") + kind + "'");
  if (!j["m"].is_number_integer() || !j["N"].is_number_integer())
    throw ParseError("'m' and 'N' must be integers");
  const int m = j["m"].get<int>();
  const int n = j["N"].get<int>();
  if (m < 1 || n < 0) throw ParseError("invalid dimensions");
  if (!j["coeffs"].is_object()) throw ParseError("'coeffs' must be an object");
  return {m, n};
}

}  // namespace detail

inline json to_json(const PolyMatrix& p) {
  json coeffs = json::object();
  for (int n = 0; n <= p.degree(); ++n)
    coeffs[std::to_string(n)] = detail::matrix_to_json(p.coeff(n));
  return json{{"m", p.dim()}, {"N", p.degree()}, {"kind", "poly"}, {"coeffs", std::move(coeffs)}};
}

inline json to_json(const LaurentMatrix& s) {
  json coeffs = json::object();
  for (int n = -s.degree(); n <= s.degree(); ++n)
    coeffs[std::to_string(n)] = detail::matrix_to_json(s.coeff(n));
  return json{{"m", s.dim()}, {"N", s.degree()}, {"kind", "laurent"}, {"coeffs", std::move(coeffs)}};
}

inline PolyMatrix poly_matrix_from_json(const json& j) {
  const auto [m, n] = detail::parse_header(j, "poly");
  if (static_cast<int>(j["coeffs"].size()) != n + 1)
    throw ParseError("'coeffs' must hold indices 0..N");
  std::vector<CMatrix> blocks;
  blocks.reserve(static_cast<size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    const std::string key = std::to_string(k);
    if (!j["coeffs"].contains(key)) throw ParseError("missing coefficient index " + key);
    blocks.push_back(detail::matrix_from_json(j["coeffs"][key], m));
  }
  return PolyMatrix(m, std::move(blocks), 0.0);
}

inline LaurentMatrix laurent_matrix_from_json(const json& j) {
  const auto [m, n] = detail::parse_header(j, "laurent");
  if (static_cast<int>(j["coeffs"].size()) != 2 * n + 1)
    throw ParseError("'coeffs' must hold indices -N..N");
  std::vector<CMatrix> blocks;
  blocks.reserve(static_cast<size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) {
    const std::string key = std::to_string(k);
    if (!j["coeffs"].contains(key)) throw ParseError("missing coefficient index " + key);
    blocks.push_back(detail::matrix_from_json(j["coeffs"][key], m));
  }
  return LaurentMatrix(m, n, std::move(blocks), 0.0);
}

// Scalar polynomials travel as their 1x1 matrix form.
inline json to_json(const Poly& p) {
  std::vector<CMatrix> blocks;
  for (int k = 0; k <= std::max(0, p.degree()); ++k) {
    CMatrix b(1, 1);
    b(0, 0) = p.coeff(k);
    blocks.push_back(b);
  }
  return to_json(PolyMatrix(1, std::move(blocks), 0.0));
}

inline json to_json(const LaurentPoly& s) {
  std::vector<CMatrix> blocks;
  for (int k = -s.degree(); k <= s.degree(); ++k) {
    CMatrix b(1, 1);
    b(0, 0) = s.coeff(k);
    blocks.push_back(b);
  }
  return to_json(LaurentMatrix(1, s.degree(), std::move(blocks), 0.0));
}

inline Poly poly_from_json(const json& j) {
  const PolyMatrix p = poly_matrix_from_json(j);
  if (p.dim() != 1) throw ParseError("expected a scalar (m = 1) polynomial");
  std::vector<cd> c(static_cast<size_t>(p.degree() + 1));
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(k)] = p.coeff(k)(0, 0);
  return Poly(std::move(c));
}

inline LaurentPoly laurent_poly_from_json(const json& j) {
  const LaurentMatrix s = laurent_matrix_from_json(j);
  if (s.dim() != 1) throw ParseError("expected a scalar (m = 1) Laurent polynomial");
  std::vector<cd> c(static_cast<size_t>(2 * s.degree() + 1));
  for (int k = -s.degree(); k <= s.degree(); ++k)
    c[static_cast<size_t>(k + s.degree())] = s.coeff(k)(0, 0);
  return LaurentPoly(s.degree(), std::move(c));
}

inline json to_json(const Root& r) {
  return json{{"root", detail::complex_to_json(r.location)}, {"multiplicity", r.multiplicity}};
}

inline json to_json(const ZeroReport& rep) {
  json inside = json::array(), outside = json::array(), circle = json::array();
  for (const Root& r : rep.inside) inside.push_back(to_json(r));
  for (const Root& r : rep.outside) outside.push_back(to_json(r));
  for (const Root& r : rep.on_circle) circle.push_back(to_json(r));
  return json{{"inside", std::move(inside)},
              {"outside", std::move(outside)},
              {"on_circle", std::move(circle)},
              {"optimal", rep.optimal()}};
}

inline json to_json(const PositivityReport& rep) {
  return json{{"min_eigenvalue", rep.min_eigenvalue},
              {"worst_theta", rep.worst_theta},
              {"hermitian_defect", rep.hermitian_defect},
              {"samples", rep.samples}};
}

inline json to_json(const FactorCheckReport& rep) {
  return json{{"coeff_residual", rep.coeff_residual},
              {"sample_residual", rep.sample_residual},
              {"scale", rep.scale},
              {"tolerance", rep.tolerance},
              {"pass", rep.pass}};
}

// Canonical text form: sorted keys, shortest round-trip floats, trailing
// newline. parse(dump(x)) == x and dump(parse(t)) == t.
inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

}  // namespace specfact

#endif  // SPECFACT_JSON_IO_HPP
