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

// Brute-force ground truth: dense matrices, group closure by breadth-first
// search, and the code projector as the average over the group. None of the
// oracle computations go through the Smith normal form; the verify_* helpers
// compare them against the algebraic results.

#pragma once

#include <cmath>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "quditstab/checkmatrix.hpp"
#include "quditstab/clifford.hpp"
#include "quditstab/dense.hpp"
#include "quditstab/pauli.hpp"
#include "quditstab/standard_form.hpp"

namespace quditstab::oracle {

inline constexpr double kTolerance = 1e-9;
inline constexpr std::size_t kMaxGroupSize = 10000;

/// w^lambda X^x Z^z as a matrix: |j> -> w^(lambda + z.j) |j - x>.
inline DenseOperator pauli_to_dense(const PauliProduct& p, std::size_t bound = kDefaultOracleBound) {
  const Int d = p.dim();
  const std::size_t n = p.num_qudits();
  const std::size_t dim = dense_dimension(d, n, bound);
  DenseOperator m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    auto digits = basis_digits(col, d, n);
    Int exponent = p.phase();
    for (std::size_t q = 0; q < n; ++q) {
      exponent += p.z()[q] * digits[q];
      digits[q] -= p.x()[q];
    }
    m(basis_index(digits, d), col) = root_of_unity(d, exponent % d);
  }
  return m;
}

/// Every element of the group generated by `gens`, identity first.
inline std::vector<PauliProduct> enumerate_group(const std::vector<PauliProduct>& gens,
                                                 std::size_t max_size = kMaxGroupSize) {
  if (gens.empty()) throw DimensionMismatch("no generators");
  const auto id = PauliProduct::identity(gens[0].modulus(), gens[0].num_qudits());
  std::vector<PauliProduct> elements{id};
  std::unordered_set<PauliProduct, PauliHash> seen{id};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const PauliProduct cur = elements[frontier.front()];
    frontier.pop_front();
    for (const auto& g : gens) {
      PauliProduct next = multiply(cur, g);
      if (seen.insert(next).second) {
        if (elements.size() >= max_size)
          throw GroupTooLarge("group closure exceeds " + std::to_string(max_size) + " elements");
        elements.push_back(next);
        frontier.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

inline std::vector<PauliProduct> enumerate_group(const StabilizerPresentation& s,
                                                 std::size_t max_size = kMaxGroupSize) {
  return enumerate_group(s.to_generators(), max_size);
}

/// Validity decided from the closure: abelian and free of w^l I, l != 0.
inline bool closure_is_valid(const std::vector<PauliProduct>& group) {
  for (const auto& p : group)
    if (p.is_scalar() && p.phase() != 0) return false;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j)
      if (!(multiply(group[i], group[j]) == multiply(group[j], group[i]))) return false;
  return true;
}

/// P = (1/|S|) sum_{s in S} s.
inline DenseOperator projector(const StabilizerPresentation& s, std::size_t bound = kDefaultOracleBound) {
  const std::size_t dim = dense_dimension(s.dim(), s.num_qudits(), bound);
  const auto group = enumerate_group(s);
  for (const auto& p : group)
    if (p.is_scalar() && p.phase() != 0)
      throw InvalidStabilizer("group contains " + format_pauli(p));
  const auto gens = s.to_generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(multiply(gens[i], gens[j]) == multiply(gens[j], gens[i])))
        throw InvalidStabilizer("generators do not commute");
  DenseOperator sum(dim);
  for (const auto& p : group) sum += pauli_to_dense(p, bound);
  sum *= 1.0 / static_cast<double>(group.size());
  return sum;
}

struct IdentityCheck {
  std::string name;
  double error;
  bool pass;
};

struct IdentityReport {
  Int dim;
  std::vector<IdentityCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Dense verification of the gate catalog identities on two qudits:
/// SWAP decomposition, CNOT^dagger forms, CNOT vs CP through F, and every
/// single- and two-qudit conjugation table entry.
inline IdentityReport assert_identities(Int d) {
  const Modulus mod(d);
  const std::size_t n = 2;
  IdentityReport report{d, {}};
  auto check = [&](std::string name, const DenseOperator& lhs, const DenseOperator& rhs) {
    const double err = max_abs_diff(lhs, rhs);
    report.checks.push_back({std::move(name), err, err < kTolerance});
  };
  auto gate = [&](const GateOp& g) { return gate_to_dense(g, d, n); };
  auto pauli = [&](const std::string& text) { return pauli_to_dense(parse_pauli(text, mod, n)); };
  auto conj = [](const DenseOperator& u, const DenseOperator& p) { return u * p * u.adjoint(); };
  const std::string dm1 = std::to_string(d - 1);

  const auto f_a = gate(GateOp::fourier(0)), f_b = gate(GateOp::fourier(1));
  const auto cnot_ab = gate(GateOp::cnot(0, 1)), cnot_ba = gate(GateOp::cnot(1, 0));
  const auto swap_ab = gate(GateOp::swap(0, 1)), cp_ab = gate(GateOp::cphase(0, 1));

  check("SWAP_ab = CNOT_ab CNOT_ba^dag CNOT_ab (F_a^2 x I)", swap_ab,
        cnot_ab * cnot_ba.adjoint() * cnot_ab * (f_a * f_a));
  DenseOperator cnot_pow = DenseOperator::identity(f_a.dim());
  for (Int i = 0; i < d - 1; ++i) cnot_pow = cnot_pow * cnot_ba;
  check("CNOT_ba^dag = CNOT_ba^(D-1)", cnot_ba.adjoint(), cnot_pow);
  check("CNOT_ba^dag = (I x F_b^2) CNOT_ba (I x F_b^2)", cnot_ba.adjoint(),
        (f_b * f_b) * cnot_ba * (f_b * f_b));
  check("CNOT_ab = (I x F_b) CP_ab (I x F_b)^dag", cnot_ab, f_b * cp_ab * f_b.adjoint());

  // One-qudit tables on qudit a; q ranges over every unit.
  check("F Z F^dag = X", conj(f_a, pauli("Z1")), pauli("X1"));
  check("F X F^dag = Z^(D-1)", conj(f_a, pauli("X1")), pauli("Z1^" + dm1));
  for (Int q = 1; q < d; ++q) {
    if (!mod.is_unit(q)) continue;
    const auto s = gate(GateOp::mult(q, 0));
    check("S_" + std::to_string(q) + " Z S^dag = Z^q", conj(s, pauli("Z1")),
          pauli("Z1^" + std::to_string(q)));
    check("S_" + std::to_string(q) + " X S^dag = X^(q^-1)", conj(s, pauli("X1")),
          pauli("X1^" + std::to_string(mod.inverse(q))));
  }

  // Two-qudit tables: rows I Z_b, Z_a I, I X_b, X_a I.
  const char* inputs[] = {"Z2", "Z1", "X2", "X1"};
  const std::string cnot_out[] = {"Z1 Z2", "Z1", "X2", "X1 X2^" + dm1};
  const std::string swap_out[] = {"Z1", "Z2", "X1", "X2"};
  const std::string cp_out[] = {"Z2", "Z1", "Z1^" + dm1 + " X2", "X1 Z2^" + dm1};
  for (int r = 0; r < 4; ++r) {
    const auto in = pauli(inputs[r]);
    check(std::string("CNOT_ab: ") + inputs[r] + " -> " + cnot_out[r], conj(cnot_ab, in), pauli(cnot_out[r]));
    check(std::string("SWAP_ab: ") + inputs[r] + " -> " + swap_out[r], conj(swap_ab, in), pauli(swap_out[r]));
    check(std::string("CP_ab: ") + inputs[r] + " -> " + cp_out[r], conj(cp_ab, in), pauli(cp_out[r]));
  }
  return report;
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

/// Dense cross-check of the order and dimension computed algebraically:
/// closure size, projector trace, P = P^dag = P^2.
inline Verdict verify_presentation(const StabilizerPresentation& s, std::size_t bound = kDefaultOracleBound) {
  Verdict v;
  const auto group = enumerate_group(s);
  const auto order = group_order(s);
  const auto k_dim = code_dimension(s);
  v.require(group.size() == order, "closure size " + std::to_string(group.size()) +
                                       " != group order " + std::to_string(order));
  const auto p = projector(s, bound);
  v.require(std::abs(p.trace() - Complex(static_cast<double>(k_dim))) < 1e-6,
            "projector trace differs from K = " + std::to_string(k_dim));
  v.require(max_abs_diff(p, p.adjoint()) < kTolerance, "projector not hermitian");
  v.require(max_abs_diff(p, p * p) < kTolerance, "projector not idempotent");
  return v;
}

/// Dense cross-check of a standardization: the result projector must equal
/// U P_in U^dag for U the product of the emitted gates, and order and
/// dimension must be preserved.
inline Verdict verify_standard_form(const StandardForm& sf, std::size_t bound = kDefaultOracleBound) {
  Verdict v = verify_presentation(sf.input, bound);
  const auto after = verify_presentation(sf.result, bound);
  v.pass = v.pass && after.pass;
  v.notes.insert(v.notes.end(), after.notes.begin(), after.notes.end());
  v.require(group_order(sf.input) == group_order(sf.result), "group order changed");
  const std::size_t n = sf.input.num_qudits();
  DenseOperator u = DenseOperator::identity(dense_dimension(sf.input.dim(), n, bound));
  for (const auto& g : sf.gates) u = gate_to_dense(g, sf.input.dim(), n, bound) * u;
  const auto p_in = projector(sf.input, bound);
  const auto p_out = projector(sf.result, bound);
  v.require(max_abs_diff(u * p_in * u.adjoint(), p_out) < kTolerance,
            "result projector is not the gate-conjugated input projector");
  return v;
}

}  // namespace quditstab::oracle
