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

// Smith normal form over Z_D built only from elementary row/column operations,
// plus the linear solver a.A = b over Z_D that sits on top of it.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quditstab/matrix.hpp"
#include "quditstab/modring.hpp"

namespace quditstab {

enum class OpKind { SwapRows, SwapCols, ScaleRow, ScaleCol, AddRows, AddCols };

/// One elementary operation. Swaps exchange `target` and `source`; scales
/// multiply `target` by the unit `multiplier`; adds perform
/// target += multiplier * source.
struct ElementaryOp {
  OpKind kind;
  std::size_t target = 0;
  std::size_t source = 0;
  Int multiplier = 0;

  bool is_row_op() const {
    return kind == OpKind::SwapRows || kind == OpKind::ScaleRow || kind == OpKind::AddRows;
  }

  static ElementaryOp swap_rows(std::size_t i, std::size_t j) { return {OpKind::SwapRows, i, j, 0}; }
  static ElementaryOp swap_cols(std::size_t i, std::size_t j) { return {OpKind::SwapCols, i, j, 0}; }
  static ElementaryOp scale_row(std::size_t i, Int q) { return {OpKind::ScaleRow, i, i, q}; }
  static ElementaryOp scale_col(std::size_t i, Int q) { return {OpKind::ScaleCol, i, i, q}; }
  static ElementaryOp add_rows(std::size_t target, std::size_t source, Int m) {
    return {OpKind::AddRows, target, source, m};
  }
  static ElementaryOp add_cols(std::size_t target, std::size_t source, Int m) {
    return {OpKind::AddCols, target, source, m};
  }

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Applies `op` in place. Throws if the op is malformed for this matrix.
inline void apply_op(Matrix& a, const ElementaryOp& op) {
  const auto& mod = a.modulus();
  const bool rows = op.is_row_op();
  const std::size_t extent = rows ? a.rows() : a.cols();
  if (op.target >= extent || op.source >= extent) throw IndexOutOfRange("elementary op index");
  const std::size_t len = rows ? a.cols() : a.rows();
  auto get = [&](std::size_t line, std::size_t k) { return rows ? a(line, k) : a(k, line); };
  auto put = [&](std::size_t line, std::size_t k, Int v) {
    rows ? a.set(line, k, v) : a.set(k, line, v);
  };
  switch (op.kind) {
    case OpKind::SwapRows:
    case OpKind::SwapCols:
      for (std::size_t k = 0; k < len; ++k) {
        const Int t = get(op.target, k);
        put(op.target, k, get(op.source, k));
        put(op.source, k, t);
      }
      break;
    case OpKind::ScaleRow:
    case OpKind::ScaleCol:
      if (!mod.is_unit(op.multiplier))
        throw NotAUnit("scale by non-unit " + std::to_string(op.multiplier));
      for (std::size_t k = 0; k < len; ++k) put(op.target, k, mod.mul(get(op.target, k), op.multiplier));
      break;
    case OpKind::AddRows:
    case OpKind::AddCols:
      if (op.target == op.source) throw Error("elementary add needs distinct lines");
      for (std::size_t k = 0; k < len; ++k)
        put(op.target, k, mod.add(get(op.target, k), mod.mul(op.multiplier, get(op.source, k))));
      break;
  }
}

/// The operation undoing `op`.
inline ElementaryOp inverse_op(const ElementaryOp& op, const Modulus& mod) {
  switch (op.kind) {
    case OpKind::ScaleRow:
    case OpKind::ScaleCol:
      return {op.kind, op.target, op.source, mod.inverse(op.multiplier)};
    case OpKind::AddRows:
    case OpKind::AddCols:
      return {op.kind, op.target, op.source, mod.neg(op.multiplier)};
    default:
      return op;
  }
}

/// Text form with 1-based indices: SWAPROWS(i,j), SCALEROW(i,q), ADDROW(i,j,m)
/// (row i += m * row j), and the column analogues SWAPCOLS, SCALECOL, ADDCOL.
inline std::string format_op(const ElementaryOp& op) {
  std::ostringstream os;
  const auto t = op.target + 1, s = op.source + 1;
  switch (op.kind) {
    case OpKind::SwapRows: os << "SWAPROWS(" << t << ',' << s << ')'; break;
    case OpKind::SwapCols: os << "SWAPCOLS(" << t << ',' << s << ')'; break;
    case OpKind::ScaleRow: os << "SCALEROW(" << t << ',' << op.multiplier << ')'; break;
    case OpKind::ScaleCol: os << "SCALECOL(" << t << ',' << op.multiplier << ')'; break;
    case OpKind::AddRows: os << "ADDROW(" << t << ',' << s << ',' << op.multiplier << ')'; break;
    case OpKind::AddCols: os << "ADDCOL(" << t << ',' << s << ',' << op.multiplier << ')'; break;
  }
  return os.str();
}

inline ElementaryOp parse_op(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open ||
      close + 1 != text.size())
    throw SyntaxError("malformed elementary op '" + text + "'", 0);
  const std::string name = text.substr(0, open);
  std::vector<Int> args;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      args.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw SyntaxError("bad op argument '" + item + "'", open + 1);
  }
  auto idx = [&](std::size_t k) {
    if (args[k] < 1) throw SyntaxError("op indices are 1-based", open + 1);
    return static_cast<std::size_t>(args[k] - 1);
  };
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw SyntaxError("wrong argument count in '" + text + "'", open + 1);
  };
  if (name == "SWAPROWS") { need(2); return ElementaryOp::swap_rows(idx(0), idx(1)); }
  if (name == "SWAPCOLS") { need(2); return ElementaryOp::swap_cols(idx(0), idx(1)); }
  if (name == "SCALEROW") { need(2); return ElementaryOp::scale_row(idx(0), args[1]); }
  if (name == "SCALECOL") { need(2); return ElementaryOp::scale_col(idx(0), args[1]); }
  if (name == "ADDROW") { need(3); return ElementaryOp::add_rows(idx(0), idx(1), args[2]); }
  if (name == "ADDCOL") { need(3); return ElementaryOp::add_cols(idx(0), idx(1), args[2]); }
  throw SyntaxError("unknown elementary op '" + name + "'", 0);
}

/// Reduces `a` to Smith normal form in place, reporting every operation to
/// `on_op` after it has been applied to `a`. Pivot rule: the entry of least
/// gcd with D in the remaining block, ties broken by lowest (row, col). On
/// return a is diagonal, each nonzero diagonal entry is a divisor of D and
/// d_1 | d_2 | ... with zero entries read as D.
template <typename OnOp>
void reduce_to_smith(Matrix& a, OnOp&& on_op) {
  const auto& mod = a.modulus();
  const std::size_t rows = a.rows(), cols = a.cols();
  auto emit = [&](const ElementaryOp& op) {
    apply_op(a, op);
    on_op(op);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    Int best = mod.value();
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        const Int g = mod.gcd_with(a(i, j));
        if (g < best) {
          best = g;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    if (pi != t) emit(ElementaryOp::swap_rows(t, pi));
    if (pj != t) emit(ElementaryOp::swap_cols(t, pj));

    for (;;) {
      // Concentrate the gcd of row t and column t in the pivot. Each
      // stabilizing add strictly lowers gcd(pivot, D), so this terminates.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!mod.in_ideal(a(i, t), a(t, t))) {
            emit(ElementaryOp::add_rows(t, i, stab_coeff(a(t, t), a(i, t), mod)));
            changed = true;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mod.in_ideal(a(t, j), a(t, t))) {
            emit(ElementaryOp::add_cols(t, j, stab_coeff(a(t, t), a(t, j), mod)));
            changed = true;
          }
      }
      const Int u = unit_normalizer(a(t, t), mod);
      if (u != 1) emit(ElementaryOp::scale_row(t, u));
      const Int g = a(t, t);

      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) emit(ElementaryOp::add_rows(i, t, mod.neg(a(i, t) / g)));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(t, j) != 0) emit(ElementaryOp::add_cols(j, t, mod.neg(a(t, j) / g)));

      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % g != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      emit(ElementaryOp::add_rows(t, bad_row, 1));
    }
  }
}

/// Result of smith_normal_form: row_transform * A * col_transform == diag.
struct SnfDecomposition {
  Matrix row_transform;  // k x k, invertible
  Matrix col_transform;  // m x m, invertible
  Matrix diag;           // k x m
  std::vector<ElementaryOp> row_log;
  std::vector<ElementaryOp> col_log;

  std::size_t rank_bound() const { return std::min(diag.rows(), diag.cols()); }

  /// Diagonal entries d_1..d_min(k,m) in canonical divisor form.
  std::vector<Int> diagonal() const {
    std::vector<Int> d(rank_bound());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = diag(i, i);
    return d;
  }
};

inline SnfDecomposition smith_normal_form(const Matrix& a) {
  const auto& mod = a.modulus();
  SnfDecomposition dec{Matrix::identity(a.rows(), mod), Matrix::identity(a.cols(), mod), a, {}, {}};
  reduce_to_smith(dec.diag, [&](const ElementaryOp& op) {
    if (op.is_row_op()) {
      apply_op(dec.row_transform, op);
      dec.row_log.push_back(op);
    } else {
      apply_op(dec.col_transform, op);
      dec.col_log.push_back(op);
    }
  });
  return dec;
}

/// Order of the row span of the diagonal: prod D / gcd(d_i, D).
inline Int row_lattice_order(const SnfDecomposition& dec) {
  const auto& mod = dec.diag.modulus();
  Int order = 1;
  for (Int d : dec.diagonal()) order *= mod.value() / mod.gcd_with(d);
  return order;
}

struct SnfCheck {
  bool ok = true;
  std::string diagnostic;
};

/// Re-derives everything a decomposition claims about `a`: the product
/// identity, diagonal shape, divisor form and chain, log replay, and
/// invertibility of both transforms (inverse rebuilt from the reversed log).
inline SnfCheck verify_snf(const Matrix& a, const SnfDecomposition& dec) {
  const auto& mod = a.modulus();
  auto fail = [](std::string why) { return SnfCheck{false, std::move(why)}; };
  if (dec.row_transform.rows() != a.rows() || dec.row_transform.cols() != a.rows() ||
      dec.col_transform.rows() != a.cols() || dec.col_transform.cols() != a.cols() ||
      dec.diag.rows() != a.rows() || dec.diag.cols() != a.cols())
    return fail("shape mismatch");
  if (!(dec.row_transform * a * dec.col_transform == dec.diag)) return fail("V*A*W != diag");
  if (!dec.diag.is_diagonal()) return fail("diag has off-diagonal entries");
  const auto d = dec.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0 && mod.value() % d[i] != 0)
      return fail("diagonal entry " + std::to_string(d[i]) + " does not divide D");
    const Int cur = d[i] == 0 ? mod.value() : d[i];
    if (i + 1 < d.size()) {
      const Int next = d[i + 1] == 0 ? mod.value() : d[i + 1];
      if (next % cur != 0) return fail("divisibility chain broken at " + std::to_string(i));
    }
  }

  auto replay = [&](std::size_t size, const std::vector<ElementaryOp>& log) {
    Matrix m = Matrix::identity(size, mod);
    for (const auto& op : log) apply_op(m, op);
    return m;
  };
  auto replay_inverse = [&](std::size_t size, const std::vector<ElementaryOp>& log) {
    // V = E_t ... E_1, so V^-1 = E_1^-1 ... E_t^-1: the inverse ops replayed
    // in reverse order. Same for W = C_1 ... C_t.
    Matrix m = Matrix::identity(size, mod);
    for (auto it = log.rbegin(); it != log.rend(); ++it) apply_op(m, inverse_op(*it, mod));
    return m;
  };
  try {
    if (!(replay(a.rows(), dec.row_log) == dec.row_transform)) return fail("row log does not replay to V");
    if (!(replay(a.cols(), dec.col_log) == dec.col_transform)) return fail("col log does not replay to W");
    const Matrix v_inv = replay_inverse(a.rows(), dec.row_log);
    const Matrix w_inv = replay_inverse(a.cols(), dec.col_log);
    const auto iv = Matrix::identity(a.rows(), mod), iw = Matrix::identity(a.cols(), mod);
    if (!(v_inv * dec.row_transform == iv) || !(dec.row_transform * v_inv == iv))
      return fail("V not invertible");
    if (!(dec.col_transform * w_inv == iw) || !(w_inv * dec.col_transform == iw))
      return fail("W not invertible");
  } catch (const Error& e) {
    return fail(std::string("log replay failed: ") + e.what());
  }
  return {};
}

/// Solutions of a . A == b (a a row vector of length k): particular + any
/// Z_D-combination of kernel vectors. `particular` is empty when unsolvable.
struct LinearSolution {
  std::optional<std::vector<Int>> particular;
  std::vector<std::vector<Int>> kernel;
};

/// With V A W = diag, a.A = b becomes y.diag = b.W for y = a.V^-1, which
/// splits into independent scalar congruences y_i d_i == c_i.
inline LinearSolution solve_linear(const Matrix& a, const std::vector<Int>& b) {
  if (b.size() != a.cols()) throw DimensionMismatch("right-hand side length mismatch");
  const auto& mod = a.modulus();
  const Int d = mod.value();
  const auto dec = smith_normal_form(a);
  const auto c = row_times(b, dec.col_transform);
  const std::size_t k = a.rows(), m = a.cols(), r = std::min(k, m);

  LinearSolution sol;
  std::vector<Int> y(k, 0);
  bool solvable = true;
  for (std::size_t j = r; j < m; ++j)
    if (c[j] != 0) solvable = false;
  for (std::size_t i = 0; i < r; ++i) {
    const Int g = mod.gcd_with(dec.diag(i, i));
    if (c[i] % g != 0) {
      solvable = false;
      continue;
    }
    // diag(i,i) == g exactly (divisor form), or 0 when g == D.
    if (g != d) y[i] = c[i] / g;
  }
  if (solvable) sol.particular = row_times(y, dec.row_transform);

  for (std::size_t i = 0; i < k; ++i) {
    const Int step = i < r ? d / mod.gcd_with(dec.diag(i, i)) : 1;
    if (step == d) continue;
    std::vector<Int> e(k, 0);
    e[i] = step;
    sol.kernel.push_back(row_times(e, dec.row_transform));
  }
  return sol;
}

}  // namespace quditstab
