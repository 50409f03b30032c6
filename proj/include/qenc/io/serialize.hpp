// Copyright 2026 The qenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "qenc/bits.hpp"
#include "qenc/errors.hpp"
#include "qenc/estimate.hpp"
#include "qenc/quantum/density_matrix.hpp"
#include "qenc/schemes/scheme.hpp"

namespace qenc::io {

/// Keys keep insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const BitString& b) { return b.to_string(); }

inline BitString bits_from_json(const Json& j) {
  if (!j.is_string()) throw Error("expected a bit string");
  return BitString::from_string(j.get<std::string>());
}

/// Layout plus the matrix, row-major, each entry a [re, im] pair.
inline Json to_json(const DensityMatrix& s) {
  Json layout = Json::array();
  for (const auto& r : s.layout()) layout.push_back(Json{{"name", r.name}, {"qubits", r.qubits}});
  Json rows = Json::array();
  const Matrix& m = s.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return Json{{"layout", std::move(layout)}, {"matrix", std::move(rows)}};
}

inline DensityMatrix state_from_json(const Json& j) {
  Layout layout;
  for (const auto& r : j.at("layout")) layout.push_back(Register{r.at("name").get<std::string>(), r.at("qubits").get<int>()});
  const auto& rows = j.at("matrix");
  const auto d = static_cast<Eigen::Index>(rows.size());
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != d) throw DimensionMismatch("matrix is not square");
    for (Eigen::Index k = 0; k < d; ++k) {
      const auto& e = row.at(static_cast<std::size_t>(k));
      m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return DensityMatrix::from_matrix(std::move(m), std::move(layout));
}

inline Json to_json(const Ciphertext& ct) {
  return Json{{"tag", to_json(ct.tag)}, {"target", ct.target}, {"payload", to_json(ct.payload)}};
}

inline Ciphertext ciphertext_from_json(const Json& j) {
  return Ciphertext{bits_from_json(j.at("tag")), state_from_json(j.at("payload")),
                    j.at("target").get<std::string>()};
}

inline Json to_json(const AdvantageEstimate& e) {
  return Json{{"mode", e.exact ? "exact" : "sample"},
              {"trials", e.trials},
              {"p_real", e.p_real},
              {"p_ideal", e.p_ideal},
              {"advantage", e.advantage},
              {"ci", e.ci_halfwidth}};
}

inline Json to_json(const ProbabilityEstimate& e) {
  return Json{{"mode", e.exact ? "exact" : "sample"},
              {"trials", e.trials},
              {"p", e.p},
              {"ci", e.ci_halfwidth}};
}

namespace detail {

inline std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

inline void flatten(const Json& v, const std::string& prefix, Json& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
  } else if (!v.is_array()) {
    out[prefix] = v;
  }
}

}  // namespace detail

/// CSV view of a results array: nested objects become dotted columns,
/// arrays are dropped. Columns follow first appearance.
inline std::string results_csv(const Json& results) {
  std::vector<Json> rows;
  std::vector<std::string> columns;
  for (const auto& r : results) {
    Json flat = Json::object();
    detail::flatten(r, "", flat);
    for (const auto& [k, v] : flat.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
    rows.push_back(std::move(flat));
  }
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + detail::csv_cell(columns[i]);
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (r.contains(columns[i])) out += detail::csv_cell(r.at(columns[i]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace qenc::io
