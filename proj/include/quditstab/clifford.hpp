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

// Clifford gate catalog: Fourier F, multiplicative S_q, CNOT^m, SWAP and
// controlled-phase CP. Conjugation rules act on (phase, x, z) directly; every
// rule is cross-checked against gate_to_dense in the tests.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quditstab/checkmatrix.hpp"
#include "quditstab/dense.hpp"
#include "quditstab/pauli.hpp"
#include "quditstab/snf.hpp"

namespace quditstab {

enum class GateKind { Fourier, Mult, Cnot, Swap, Cphase };

/// A catalog gate. Qudit indices are 0-based; `a` is the control of CNOT and
/// CP. `q` is the unit of S_q, `power` the exponent of CNOT.
struct GateOp {
  GateKind kind;
  std::size_t a = 0;
  std::size_t b = 0;
  Int q = 1;
  Int power = 1;

  static GateOp fourier(std::size_t a) { return {GateKind::Fourier, a, a, 1, 1}; }
  static GateOp mult(Int q, std::size_t a) { return {GateKind::Mult, a, a, q, 1}; }
  static GateOp cnot(std::size_t a, std::size_t b, Int m = 1) { return {GateKind::Cnot, a, b, 1, m}; }
  static GateOp swap(std::size_t a, std::size_t b) { return {GateKind::Swap, a, b, 1, 1}; }
  static GateOp cphase(std::size_t a, std::size_t b) { return {GateKind::Cphase, a, b, 1, 1}; }

  bool two_qudit() const {
    return kind == GateKind::Cnot || kind == GateKind::Swap || kind == GateKind::Cphase;
  }

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

inline void validate_gate(const GateOp& g, const Modulus& mod, std::size_t n) {
  if (g.a >= n || (g.two_qudit() && g.b >= n))
    throw IndexOutOfRange("gate acts on a qudit outside 1.." + std::to_string(n));
  if (g.two_qudit() && g.a == g.b) throw Error("two-qudit gate needs distinct qudits");
  if (g.kind == GateKind::Mult && !mod.is_unit(g.q))
    throw NotAUnit("S_q needs a unit q, got " + std::to_string(g.q));
  if (g.kind == GateKind::Cnot && g.power < 1) throw Error("CNOT power must be >= 1");
}

/// g p g^dagger.
inline PauliProduct conjugate_pauli(const GateOp& g, const PauliProduct& p) {
  const auto& mod = p.modulus();
  validate_gate(g, mod, p.num_qudits());
  PauliProduct out = p;
  const Int xa = p.x()[g.a], za = p.z()[g.a];
  switch (g.kind) {
    case GateKind::Fourier:
      // X^x Z^z -> Z^-x X^z = w^(xz) X^z Z^-x
      out.set_phase(mod.add(p.phase(), mod.mul(xa, za)));
      out.set_x(g.a, za);
      out.set_z(g.a, mod.neg(xa));
      break;
    case GateKind::Mult:
      out.set_x(g.a, mod.mul(xa, mod.inverse(g.q)));
      out.set_z(g.a, mod.mul(za, g.q));
      break;
    case GateKind::Cnot: {
      const Int m = mod.reduce(g.power);
      out.set_x(g.b, mod.sub(p.x()[g.b], mod.mul(m, xa)));
      out.set_z(g.a, mod.add(za, mod.mul(m, p.z()[g.b])));
      break;
    }
    case GateKind::Swap:
      out.set_x(g.a, p.x()[g.b]);
      out.set_z(g.a, p.z()[g.b]);
      out.set_x(g.b, xa);
      out.set_z(g.b, za);
      break;
    case GateKind::Cphase: {
      // Z_b^-xa from the image of X_a^xa must pass X_b^xb: w^(xa xb).
      const Int xb = p.x()[g.b];
      out.set_phase(mod.add(p.phase(), mod.mul(xa, xb)));
      out.set_z(g.a, mod.sub(za, xb));
      out.set_z(g.b, mod.sub(p.z()[g.b], xa));
      break;
    }
  }
  return out;
}

/// Conjugates every generator by the gates in order (first gate applied first).
inline StabilizerPresentation conjugate_presentation(std::span<const GateOp> gates,
                                                     const StabilizerPresentation& s) {
  auto gens = s.to_generators();
  for (const auto& g : gates)
    for (auto& p : gens) p = conjugate_pauli(g, p);
  if (gens.empty()) return s;
  return StabilizerPresentation::from_generators(gens);
}

inline StabilizerPresentation conjugate_presentation(const GateOp& g, const StabilizerPresentation& s) {
  return conjugate_presentation(std::span<const GateOp>(&g, 1), s);
}

namespace detail {

enum class Block { X, Z, Mixed };

inline Block column_block(const ElementaryOp& op, std::size_t n) {
  const bool tx = op.target < n, sx = op.source < n;
  if (op.target >= 2 * n || op.source >= 2 * n) throw IndexOutOfRange("column index beyond 2n");
  if (tx && sx) return Block::X;
  if (!tx && !sx) return Block::Z;
  return Block::Mixed;
}

}  // namespace detail

/// The Z-block (resp. X-block) column operation that a gate realizing the
/// given X-block (resp. Z-block) column operation performs alongside it.
inline ElementaryOp partner_column_op(const ElementaryOp& op, std::size_t n, const Modulus& mod) {
  if (op.is_row_op()) throw UnrealizableOp("row operations are not realized by gates");
  const auto block = detail::column_block(op, n);
  if (block == detail::Block::Mixed)
    throw UnrealizableOp("column operation mixes the X and Z blocks");
  const bool from_x = block == detail::Block::X;
  auto shift = [&](std::size_t c) { return from_x ? c + n : c - n; };
  switch (op.kind) {
    case OpKind::SwapCols: return ElementaryOp::swap_cols(shift(op.target), shift(op.source));
    case OpKind::ScaleCol: return ElementaryOp::scale_col(shift(op.target), mod.inverse(op.multiplier));
    case OpKind::AddCols:
      // X: col b += m col a  <->  Z: col a+n -= m col b+n (and symmetrically).
      return ElementaryOp::add_cols(shift(op.source), shift(op.target), mod.neg(op.multiplier));
    default: throw UnrealizableOp("not a column operation");
  }
}

/// Compiles a column operation on either block of the 2n-column parity-check
/// matrix to the gate whose conjugation performs it together with its
/// partner on the other block:
///   swap X cols a,b                 -> SWAP(a,b)
///   scale X col a by q^-1           -> S_q on a
///   X col b -= m * X col a          -> CNOT(a,b)^m  (Z col a+n += m * Z col b+n)
inline GateOp column_op_to_gate(const ElementaryOp& op, std::size_t n, const Modulus& mod) {
  if (op.is_row_op()) throw UnrealizableOp("row operations are not realized by gates");
  const auto block = detail::column_block(op, n);
  if (block == detail::Block::Mixed)
    throw UnrealizableOp("column operation mixes the X and Z blocks");
  const ElementaryOp x_op = block == detail::Block::X ? op : partner_column_op(op, n, mod);
  switch (x_op.kind) {
    case OpKind::SwapCols: return GateOp::swap(x_op.target, x_op.source);
    case OpKind::ScaleCol: return GateOp::mult(mod.inverse(x_op.multiplier), x_op.target);
    case OpKind::AddCols: {
      const Int m = mod.neg(x_op.multiplier);
      return GateOp::cnot(x_op.source, x_op.target, m == 0 ? mod.value() : m);
    }
    default: throw UnrealizableOp("not a column operation");
  }
}

/// Checks that z_op is the partner of x_op and compiles the pair.
inline GateOp column_op_to_gate(const ElementaryOp& x_op, const ElementaryOp& z_op, std::size_t n,
                                const Modulus& mod) {
  if (x_op.is_row_op() || z_op.is_row_op() || detail::column_block(x_op, n) != detail::Block::X ||
      detail::column_block(z_op, n) != detail::Block::Z)
    throw UnrealizableOp("expected an X-block op and a Z-block op");
  const auto expected = partner_column_op(x_op, n, mod);
  const bool same = expected.kind == z_op.kind && mod.reduce(expected.multiplier) == mod.reduce(z_op.multiplier) &&
                    ((expected.target == z_op.target && expected.source == z_op.source) ||
                     (expected.kind == OpKind::SwapCols && expected.target == z_op.source &&
                      expected.source == z_op.target));
  if (!same) throw UnrealizableOp("Z-block op is not the partner of the X-block op");
  return column_op_to_gate(x_op, n, mod);
}

/// The (X-block, Z-block) column operations a SWAP, S_q or CNOT^m performs.
inline std::pair<ElementaryOp, ElementaryOp> gate_column_ops(const GateOp& g, std::size_t n,
                                                             const Modulus& mod) {
  validate_gate(g, mod, n);
  ElementaryOp x_op{};
  switch (g.kind) {
    case GateKind::Swap: x_op = ElementaryOp::swap_cols(g.a, g.b); break;
    case GateKind::Mult: x_op = ElementaryOp::scale_col(g.a, mod.inverse(g.q)); break;
    case GateKind::Cnot: x_op = ElementaryOp::add_cols(g.b, g.a, mod.neg(g.power)); break;
    default: throw UnrealizableOp("F and CP mix the X and Z blocks");
  }
  return {x_op, partner_column_op(x_op, n, mod)};
}

/// Dense unitary of a gate on n qudits.
inline DenseOperator gate_to_dense(const GateOp& g, Int d, std::size_t n,
                                   std::size_t bound = kDefaultOracleBound) {
  const Modulus mod(d);
  validate_gate(g, mod, n);
  const std::size_t dim = dense_dimension(d, n, bound);
  DenseOperator u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    auto in = basis_digits(col, d, n);
    auto out = in;
    switch (g.kind) {
      case GateKind::Fourier: {
        // sum_{j,k} w^{jk} |j><k| / sqrt(D)
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (Int j = 0; j < d; ++j) {
          out[g.a] = j;
          u(basis_index(out, d), col) += norm * root_of_unity(d, j * in[g.a]);
        }
        continue;
      }
      case GateKind::Mult:  // sum_j |j><jq|, i.e. |m> -> |m q^-1>
        out[g.a] = mod.mul(in[g.a], mod.inverse(g.q));
        u(basis_index(out, d), col) = 1.0;
        break;
      case GateKind::Cnot:  // |j>|k> -> |j>|k - m j>
        out[g.b] = mod.sub(in[g.b], mod.mul(g.power, in[g.a]));
        u(basis_index(out, d), col) = 1.0;
        break;
      case GateKind::Swap:
        std::swap(out[g.a], out[g.b]);
        u(basis_index(out, d), col) = 1.0;
        break;
      case GateKind::Cphase:
        u(col, col) = root_of_unity(d, in[g.a] * in[g.b]);
        break;
    }
  }
  return u;
}

/// One gate per line: F(a), S(q,a), CNOT(a,b)^m, SWAP(a,b), CP(a,b); 1-based.
inline std::string format_gate(const GateOp& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GateKind::Fourier: os << "F(" << g.a + 1 << ')'; break;
    case GateKind::Mult: os << "S(" << g.q << ',' << g.a + 1 << ')'; break;
    case GateKind::Cnot: os << "CNOT(" << g.a + 1 << ',' << g.b + 1 << ")^" << g.power; break;
    case GateKind::Swap: os << "SWAP(" << g.a + 1 << ',' << g.b + 1 << ')'; break;
    case GateKind::Cphase: os << "CP(" << g.a + 1 << ',' << g.b + 1 << ')'; break;
  }
  return os.str();
}

inline GateOp parse_gate(const std::string& text) {
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw SyntaxError("malformed gate '" + text + "'", 0);
  const std::string name = text.substr(0, open);
  std::vector<Int> args;
  {
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      Int v = 0;
      if (!detail::parse_int(item, v)) throw SyntaxError("bad gate argument '" + item + "'", open + 1);
      args.push_back(v);
    }
  }
  Int power = 1;
  const std::string tail = text.substr(close + 1);
  if (!tail.empty()) {
    if (name != "CNOT" || tail[0] != '^' || !detail::parse_int(tail.substr(1), power) || power < 1)
      throw SyntaxError("unexpected suffix '" + tail + "'", close + 1);
  }
  auto qudit = [&](std::size_t k) {
    if (args[k] < 1) throw SyntaxError("qudit labels are 1-based", open + 1);
    return static_cast<std::size_t>(args[k] - 1);
  };
  auto need = [&](std::size_t count) {
    if (args.size() != count) throw SyntaxError("wrong argument count in '" + text + "'", open + 1);
  };
  if (name == "F") { need(1); return GateOp::fourier(qudit(0)); }
  if (name == "S") { need(2); return GateOp::mult(args[0], qudit(1)); }
  if (name == "CNOT") { need(2); return GateOp::cnot(qudit(0), qudit(1), power); }
  if (name == "SWAP") { need(2); return GateOp::swap(qudit(0), qudit(1)); }
  if (name == "CP") { need(2); return GateOp::cphase(qudit(0), qudit(1)); }
  throw SyntaxError("unknown gate '" + name + "'", 0);
}

}  // namespace quditstab
