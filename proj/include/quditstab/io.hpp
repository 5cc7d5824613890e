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

// Text formats.
//
// Stabilizer file:
//   D=4 n=2
//   # comment
//   w^2 X1^3 Z2^2
//   X2^2
//
// Gate file: one gate per line, see format_gate.

#pragma once

#include <cstddef>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quditstab/checkmatrix.hpp"
#include "quditstab/clifford.hpp"
#include "quditstab/pauli.hpp"

namespace quditstab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits into lines, remembering each line's offset in the text.
inline std::vector<std::pair<std::size_t, std::string_view>> lines_of(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(start, text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

inline bool is_skippable(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace detail

inline StabilizerPresentation parse_stabilizer_file(std::string_view text) {
  const auto lines = detail::lines_of(text);
  std::size_t idx = 0;
  while (idx < lines.size() && detail::is_skippable(lines[idx].second)) ++idx;
  if (idx == lines.size()) throw SyntaxError("missing 'D=<int> n=<int>' header", 0);

  static const std::regex header(R"(^\s*D\s*=\s*(\d+)\s+n\s*=\s*(\d+)\s*$)");
  std::match_results<std::string_view::const_iterator> match;
  const auto header_line = lines[idx].second;
  if (!std::regex_match(header_line.begin(), header_line.end(), match, header))
    throw SyntaxError("expected header 'D=<int> n=<int>'", lines[idx].first);
  Int d = 0, n = 0;
  if (!detail::parse_int(match[1].str(), d) || !detail::parse_int(match[2].str(), n) || d < 2 || n < 1)
    throw SyntaxError("header needs D >= 2 and n >= 1", lines[idx].first);
  const Modulus mod(d);

  std::vector<PauliProduct> gens;
  for (++idx; idx < lines.size(); ++idx) {
    const auto [offset, line] = lines[idx];
    if (detail::is_skippable(line)) continue;
    try {
      gens.push_back(parse_pauli(line, mod, static_cast<std::size_t>(n)));
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string("in generator '") + std::string(detail::trim(line)) + "'",
                        offset + e.position());
    }
  }
  if (gens.empty()) throw SyntaxError("stabilizer file lists no generators", text.size());
  return StabilizerPresentation::from_generators(gens);
}

inline StabilizerPresentation load_stabilizer_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_stabilizer_file(ss.str());
}

inline std::string format_stabilizer_file(const StabilizerPresentation& s) {
  std::ostringstream os;
  os << "D=" << s.dim() << " n=" << s.num_qudits() << '\n';
  for (const auto& g : s.to_generators()) os << format_pauli(g) << '\n';
  return os.str();
}

/// Matrix rows as "[a b | c d]", one per line, each prefixed by `indent`.
inline std::string format_check_matrix(const Matrix& m, std::size_t n, const std::string& indent = "") {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == n && j != 0) os << " |";
      os << (j ? " " : "") << m(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

inline std::string format_phase_vector(const std::vector<Int>& phases) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < phases.size(); ++i) os << (i ? "," : "") << phases[i];
  os << ')';
  return os.str();
}

inline std::string format_gate_file(const std::vector<GateOp>& gates) {
  std::string out;
  for (const auto& g : gates) out += format_gate(g) + '\n';
  return out;
}

inline std::vector<GateOp> parse_gate_file(std::string_view text) {
  std::vector<GateOp> gates;
  for (const auto& [offset, line] : detail::lines_of(text)) {
    if (detail::is_skippable(line)) continue;
    try {
      gates.push_back(parse_gate(std::string(detail::trim(line))));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.what(), offset + e.position());
    }
  }
  return gates;
}

}  // namespace quditstab
