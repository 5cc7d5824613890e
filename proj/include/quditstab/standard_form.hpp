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

// Reduction of a stabilizer presentation to the block form
//
//          r     n-r      r     n-r
//   r   [  M      0   |  Z1     Z3 ]
//   k-r [  0      0   |  Z2     Z4 ]
//
// with M = diag(m_1..m_r), m_j nonzero divisors of D, Z4 rectangular diagonal
// with divisor entries, Z1 M == M Z1^T and Z2 M == 0 (mod D). Column work is
// done by Clifford gates only; row work by generator products.

#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "quditstab/checkmatrix.hpp"
#include "quditstab/clifford.hpp"
#include "quditstab/io.hpp"
#include "quditstab/snf.hpp"

namespace quditstab {

/// One executed step: a conjugating gate or a row operation.
using Step = std::variant<GateOp, ElementaryOp>;

struct StandardForm {
  std::size_t r = 0;
  Matrix m;   // r x r
  Matrix z1;  // r x r
  Matrix z2;  // (k-r) x r
  Matrix z3;  // r x (n-r)
  Matrix z4;  // (k-r) x (n-r)
  std::vector<GateOp> gates;
  std::vector<ElementaryOp> row_ops;
  std::vector<Step> steps;  // true execution order
  StabilizerPresentation input;
  StabilizerPresentation result;

  bool already_standard() const { return steps.empty(); }
};

/// Cuts `result` into blocks for a given r. No gates or row ops recorded.
inline StandardForm extract_standard_form(const StabilizerPresentation& result, std::size_t r,
                                          const StabilizerPresentation& input) {
  const std::size_t n = result.num_qudits(), k = result.num_generators();
  if (r > n || r > k) throw IndexOutOfRange("r exceeds min(n, k)");
  const Matrix& s = result.matrix();
  return StandardForm{r,
                      s.block(0, 0, r, r),
                      s.block(0, n, r, r),
                      s.block(r, n, k - r, r),
                      s.block(0, n + r, r, n - r),
                      s.block(r, n + r, k - r, n - r),
                      {},
                      {},
                      {},
                      input,
                      result};
}

inline StandardForm extract_standard_form(const StabilizerPresentation& result, std::size_t r) {
  return extract_standard_form(result, r, result);
}

struct StandardCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Re-verifies the block layout and both commutation constraints from the
/// raw result matrix, and that the stored blocks match it.
inline StandardCheck check_standard_invariants(const StandardForm& sf) {
  StandardCheck check;
  auto fail = [&](std::string why) {
    check.ok = false;
    check.failures.push_back(std::move(why));
  };
  const auto& s = sf.result.matrix();
  const auto& mod = sf.result.modulus();
  const Int d = mod.value();
  const std::size_t n = sf.result.num_qudits(), k = sf.result.num_generators(), r = sf.r;
  if (r > n || r > k) {
    fail("r exceeds min(n, k)");
    return check;
  }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int v = s(i, j);
      if (i < r && j == i) {
        if (v == 0 || d % v != 0) fail("M entry " + std::to_string(i + 1) + " is not a nonzero divisor of D");
      } else if (v != 0) {
        fail("X block entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") should be 0");
      }
    }

  const auto fresh = extract_standard_form(sf.result, r);
  if (!(fresh.m == sf.m) || !(fresh.z1 == sf.z1) || !(fresh.z2 == sf.z2) || !(fresh.z3 == sf.z3) ||
      !(fresh.z4 == sf.z4))
    fail("stored blocks differ from the result matrix");

  const Matrix& z4 = fresh.z4;
  if (!z4.is_diagonal()) fail("Z4 is not diagonal");
  for (std::size_t i = 0; i < std::min(z4.rows(), z4.cols()); ++i)
    if (z4(i, i) != 0 && d % z4(i, i) != 0) fail("Z4 diagonal entry is not a divisor of D");

  if (!(fresh.z1 * fresh.m == fresh.m * fresh.z1.transpose())) fail("Z1*M != M*Z1^T mod D");
  if (!(fresh.z2 * fresh.m).is_zero()) fail("Z2*M != 0 mod D");
  return check;
}

/// Brings a valid presentation to standard form. First the X block is
/// Smith-reduced (column ops compiled to SWAP / CNOT^m gates, row ops applied
/// as generator products, phases tracked); then Z4 is Smith-reduced with
/// gates on qudits r.. and row ops on rows r.., which leaves the X block
/// untouched since its last n-r columns are zero.
inline StandardForm standardize(const StabilizerPresentation& input) {
  require_valid(input);
  const auto& mod = input.modulus();
  const std::size_t n = input.num_qudits(), k = input.num_generators();

  StabilizerPresentation cur = input;
  std::vector<GateOp> gates;
  std::vector<ElementaryOp> row_ops;
  std::vector<Step> steps;
  auto run_row = [&](const ElementaryOp& op) {
    cur = apply_row_op(cur, op);
    row_ops.push_back(op);
    steps.emplace_back(op);
  };
  auto run_col = [&](const ElementaryOp& op) {
    const GateOp g = column_op_to_gate(op, n, mod);
    cur = conjugate_presentation(g, cur);
    gates.push_back(g);
    steps.emplace_back(g);
  };

  Matrix xb = input.x_block();
  reduce_to_smith(xb, [&](const ElementaryOp& op) { op.is_row_op() ? run_row(op) : run_col(op); });
  if (!(cur.x_block() == xb)) throw InternalError("X block diverged from its Smith reduction");

  std::size_t r = 0;
  while (r < std::min(k, n) && xb(r, r) != 0) ++r;

  Matrix z4 = cur.matrix().block(r, n + r, k - r, n - r);
  reduce_to_smith(z4, [&](ElementaryOp op) {
    const std::size_t offset = op.is_row_op() ? r : n + r;
    op.target += offset;
    op.source += offset;
    op.is_row_op() ? run_row(op) : run_col(op);
  });
  if (!(cur.matrix().block(r, n + r, k - r, n - r) == z4) || !(cur.x_block() == xb))
    throw InternalError("Z4 reduction disturbed the presentation");

  StandardForm sf = extract_standard_form(cur, r, input);
  sf.gates = std::move(gates);
  sf.row_ops = std::move(row_ops);
  sf.steps = std::move(steps);

  const auto check = check_standard_invariants(sf);
  if (!check.ok) throw InternalError("standard form invariant failed: " + check.failures.front());
  return sf;
}

/// Applies the gates to the input generators, then the row ops. Conjugation
/// is a group homomorphism, so this equals the interleaved execution.
inline StabilizerPresentation replay(const StandardForm& sf) {
  StabilizerPresentation s = conjugate_presentation(sf.gates, sf.input);
  for (const auto& op : sf.row_ops) s = apply_row_op(s, op);
  return s;
}

inline const char* kResultBegin = "--- result ---";
inline const char* kResultEnd = "--- end ---";

/// Human-readable derivation. The stabilizer-file text between the result
/// markers parses back to sf.result; the report ends with the final matrix.
inline std::string transcript(const StandardForm& sf) {
  std::ostringstream os;
  const auto& in = sf.input;
  const std::size_t n = in.num_qudits();
  os << "D=" << in.dim() << " n=" << n << " k=" << in.num_generators() << '\n';
  os << "input generators:\n";
  for (const auto& g : in.to_generators()) os << "  " << format_pauli(g) << '\n';
  os << "input parity-check matrix:\n" << format_check_matrix(in.matrix(), n, "  ");
  os << "input phases: " << format_phase_vector(in.phases()) << '\n';

  os << "operations:\n";
  if (sf.already_standard()) {
    os << "  none, already standard\n";
  } else {
    std::size_t idx = 1;
    for (const auto& step : sf.steps) {
      if (const auto* g = std::get_if<GateOp>(&step))
        os << "  " << idx++ << ". gate " << format_gate(*g) << '\n';
      else
        os << "  " << idx++ << ". row  " << format_op(std::get<ElementaryOp>(step)) << '\n';
    }
  }

  os << "blocks: r=" << sf.r << '\n';
  auto block = [&](const char* name, const Matrix& b) {
    os << "  " << name << " (" << b.rows() << "x" << b.cols() << ")";
    if (b.rows() == 0 || b.cols() == 0) {
      os << " empty\n";
      return;
    }
    os << ":\n" << format_check_matrix(b, b.cols(), "    ");
  };
  block("M", sf.m);
  block("Z1", sf.z1);
  block("Z2", sf.z2);
  block("Z3", sf.z3);
  block("Z4", sf.z4);

  const auto check = check_standard_invariants(sf);
  os << "invariants: " << (check.ok ? "ok" : "FAILED") << '\n';
  for (const auto& f : check.failures) os << "  " << f << '\n';

  os << "result phases: " << format_phase_vector(sf.result.phases()) << '\n';
  os << kResultBegin << '\n' << format_stabilizer_file(sf.result) << kResultEnd << '\n';
  os << "standard form parity-check matrix:\n" << format_check_matrix(sf.result.matrix(), n, "  ");
  return os.str();
}

/// The stabilizer file embedded in a transcript.
inline StabilizerPresentation parse_transcript_result(const std::string& text) {
  const auto begin = text.find(kResultBegin);
  const auto end = text.find(kResultEnd);
  if (begin == std::string::npos || end == std::string::npos || end < begin)
    throw SyntaxError("transcript has no result section", 0);
  const auto start = begin + std::string(kResultBegin).size();
  return parse_stabilizer_file(std::string_view(text).substr(start, end - start));
}

}  // namespace quditstab
