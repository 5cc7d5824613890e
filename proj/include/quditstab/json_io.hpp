// Copyright 2026 The quditstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON form of a StandardForm (schema "format": 1).

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "quditstab/standard_form.hpp"

namespace quditstab {

inline constexpr int kJsonFormat = 1;

namespace detail {

inline nlohmann::json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(std::vector<Int>(m.row(i).begin(), m.row(i).end()));
  return rows;
}

inline nlohmann::json presentation_to_json(const StabilizerPresentation& s) {
  std::vector<std::string> gens;
  for (const auto& g : s.to_generators()) gens.push_back(format_pauli(g));
  return {{"generators", gens}, {"matrix", matrix_to_json(s.matrix())}, {"phases", s.phases()}};
}

inline StabilizerPresentation presentation_from_json(const nlohmann::json& j, const Modulus& mod,
                                                     std::size_t n) {
  std::vector<PauliProduct> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_pauli(g.get<std::string>(), mod, n));
  auto s = StabilizerPresentation::from_generators(gens);
  if (j.contains("phases") && j.at("phases").get<std::vector<Int>>() != s.phases())
    throw Error("JSON phases disagree with generators");
  return s;
}

}  // namespace detail

inline nlohmann::json to_json(const StandardForm& sf) {
  std::vector<std::string> gates, row_ops;
  for (const auto& g : sf.gates) gates.push_back(format_gate(g));
  for (const auto& op : sf.row_ops) row_ops.push_back(format_op(op));
  auto steps = nlohmann::json::array();
  for (const auto& step : sf.steps) {
    if (const auto* g = std::get_if<GateOp>(&step))
      steps.push_back({{"gate", format_gate(*g)}});
    else
      steps.push_back({{"row", format_op(std::get<ElementaryOp>(step))}});
  }
  const auto check = check_standard_invariants(sf);
  return {
      {"format", kJsonFormat},
      {"D", sf.input.dim()},
      {"n", sf.input.num_qudits()},
      {"k", sf.input.num_generators()},
      {"r", sf.r},
      {"input", detail::presentation_to_json(sf.input)},
      {"result", detail::presentation_to_json(sf.result)},
      {"blocks",
       {{"M", detail::matrix_to_json(sf.m)},
        {"Z1", detail::matrix_to_json(sf.z1)},
        {"Z2", detail::matrix_to_json(sf.z2)},
        {"Z3", detail::matrix_to_json(sf.z3)},
        {"Z4", detail::matrix_to_json(sf.z4)}}},
      {"gates", gates},
      {"row_ops", row_ops},
      {"steps", steps},
      {"invariants", {{"ok", check.ok}, {"failures", check.failures}}},
  };
}

/// Rebuilds a StandardForm; blocks are re-extracted from "result" and must
/// match the stored ones.
inline StandardForm standard_form_from_json(const nlohmann::json& j) {
  if (j.at("format").get<int>() != kJsonFormat) throw Error("unsupported JSON format version");
  const Modulus mod(j.at("D").get<Int>());
  const auto n = j.at("n").get<std::size_t>();
  const auto input = detail::presentation_from_json(j.at("input"), mod, n);
  const auto result = detail::presentation_from_json(j.at("result"), mod, n);
  StandardForm sf = extract_standard_form(result, j.at("r").get<std::size_t>(), input);
  for (const auto& g : j.at("gates")) sf.gates.push_back(parse_gate(g.get<std::string>()));
  for (const auto& op : j.at("row_ops")) sf.row_ops.push_back(parse_op(op.get<std::string>()));
  for (const auto& step : j.at("steps")) {
    if (step.contains("gate"))
      sf.steps.emplace_back(parse_gate(step.at("gate").get<std::string>()));
    else
      sf.steps.emplace_back(parse_op(step.at("row").get<std::string>()));
  }
  const auto& blocks = j.at("blocks");
  if (blocks.at("M") != detail::matrix_to_json(sf.m) || blocks.at("Z1") != detail::matrix_to_json(sf.z1) ||
      blocks.at("Z2") != detail::matrix_to_json(sf.z2) || blocks.at("Z3") != detail::matrix_to_json(sf.z3) ||
      blocks.at("Z4") != detail::matrix_to_json(sf.z4))
    throw Error("JSON blocks disagree with the result matrix");
  return sf;
}

}  // namespace quditstab
