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

// Stabilizer presentations: a k x 2n parity-check matrix (X block | Z block)
// plus a phase vector, one row per generator.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quditstab/matrix.hpp"
#include "quditstab/pauli.hpp"
#include "quditstab/snf.hpp"

namespace quditstab {

class StabilizerPresentation {
 public:
  StabilizerPresentation(Modulus mod, std::size_t n, Matrix matrix, std::vector<Int> phases)
      : mod_(mod), n_(n), matrix_(std::move(matrix)), phases_(std::move(phases)) {
    if (n_ == 0) throw DimensionMismatch("presentation needs at least one qudit");
    if (!(matrix_.modulus() == mod_) || matrix_.cols() != 2 * n_)
      throw DimensionMismatch("parity-check matrix must be k x 2n over Z_D");
    if (matrix_.rows() == 0) throw DimensionMismatch("presentation needs at least one generator");
    if (matrix_.rows() > 2 * n_)
      throw TooManyGenerators(std::to_string(matrix_.rows()) + " generators exceed 2n = " +
                              std::to_string(2 * n_));
    if (phases_.size() != matrix_.rows()) throw DimensionMismatch("phase vector length != k");
    for (auto& p : phases_) p = mod_.reduce(p);
  }

  static StabilizerPresentation from_generators(std::span<const PauliProduct> gens) {
    if (gens.empty()) throw DimensionMismatch("presentation needs at least one generator");
    const auto mod = gens[0].modulus();
    const std::size_t n = gens[0].num_qudits();
    if (gens.size() > 2 * n)
      throw TooManyGenerators(std::to_string(gens.size()) + " generators exceed 2n = " +
                              std::to_string(2 * n));
    Matrix m(gens.size(), 2 * n, mod);
    std::vector<Int> phases(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      require_compatible(gens[0], gens[i]);
      for (std::size_t q = 0; q < n; ++q) {
        m.set(i, q, gens[i].x()[q]);
        m.set(i, n + q, gens[i].z()[q]);
      }
      phases[i] = gens[i].phase();
    }
    return {mod, n, std::move(m), std::move(phases)};
  }

  const Modulus& modulus() const { return mod_; }
  Int dim() const { return mod_.value(); }
  std::size_t num_qudits() const { return n_; }
  std::size_t num_generators() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<Int>& phases() const { return phases_; }
  Matrix x_block() const { return matrix_.block(0, 0, matrix_.rows(), n_); }
  Matrix z_block() const { return matrix_.block(0, n_, matrix_.rows(), n_); }

  PauliProduct generator(std::size_t i) const {
    if (i >= num_generators()) throw IndexOutOfRange("generator index " + std::to_string(i));
    std::vector<Int> x(n_), z(n_);
    for (std::size_t q = 0; q < n_; ++q) {
      x[q] = matrix_(i, q);
      z[q] = matrix_(i, n_ + q);
    }
    return PauliProduct(mod_, phases_[i], std::move(x), std::move(z));
  }

  std::vector<PauliProduct> to_generators() const {
    std::vector<PauliProduct> out;
    for (std::size_t i = 0; i < num_generators(); ++i) out.push_back(generator(i));
    return out;
  }

  /// Copy with generator i replaced.
  StabilizerPresentation with_generator(std::size_t i, const PauliProduct& p) const {
    if (i >= num_generators()) throw IndexOutOfRange("generator index " + std::to_string(i));
    if (!(p.modulus() == mod_) || p.num_qudits() != n_) throw DimensionMismatch("generator shape");
    StabilizerPresentation s = *this;
    for (std::size_t q = 0; q < n_; ++q) {
      s.matrix_.set(i, q, p.x()[q]);
      s.matrix_.set(i, n_ + q, p.z()[q]);
    }
    s.phases_[i] = p.phase();
    return s;
  }

  friend bool operator==(const StabilizerPresentation&, const StabilizerPresentation&) = default;

 private:
  Modulus mod_;
  std::size_t n_;
  Matrix matrix_;
  std::vector<Int> phases_;
};

/// Generator i becomes g_i * g_j^m; the generated group is unchanged.
inline StabilizerPresentation row_add(const StabilizerPresentation& s, std::size_t i,
                                      std::size_t j, Int m) {
  if (i >= s.num_generators() || j >= s.num_generators())
    throw IndexOutOfRange("row index out of range");
  if (i == j) throw Error("row_add needs distinct rows");
  return s.with_generator(i, multiply(s.generator(i), power(s.generator(j), s.modulus().reduce(m))));
}

inline StabilizerPresentation row_swap(const StabilizerPresentation& s, std::size_t i,
                                       std::size_t j) {
  if (i >= s.num_generators() || j >= s.num_generators())
    throw IndexOutOfRange("row index out of range");
  const PauliProduct gi = s.generator(i);
  return s.with_generator(i, s.generator(j)).with_generator(j, gi);
}

/// Generator i becomes g_i^q for a unit q.
inline StabilizerPresentation row_scale(const StabilizerPresentation& s, std::size_t i, Int q) {
  if (!s.modulus().is_unit(q)) throw NotAUnit("row scale by non-unit " + std::to_string(q));
  return s.with_generator(i, power(s.generator(i), s.modulus().reduce(q)));
}

inline StabilizerPresentation apply_row_op(const StabilizerPresentation& s, const ElementaryOp& op) {
  switch (op.kind) {
    case OpKind::SwapRows: return row_swap(s, op.target, op.source);
    case OpKind::ScaleRow: return row_scale(s, op.target, op.multiplier);
    case OpKind::AddRows: return row_add(s, op.target, op.source, op.multiplier);
    default: throw Error("column operation passed where a row operation was expected");
  }
}

/// prod_i g_i^(a_i), multiplied in generator order.
inline PauliProduct element_from_exponents(const StabilizerPresentation& s,
                                           std::span<const Int> a) {
  if (a.size() != s.num_generators()) throw DimensionMismatch("exponent vector length != k");
  PauliProduct acc = PauliProduct::identity(s.modulus(), s.num_qudits());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) acc = multiply(acc, power(s.generator(i), a[i]));
  return acc;
}

struct ValidityReport {
  bool commuting = true;
  bool phase_consistent = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
  std::optional<std::vector<Int>> offending_kernel_vector;

  bool valid() const { return commuting && phase_consistent; }

  std::string describe() const {
    std::ostringstream os;
    if (valid()) return "valid";
    if (!commuting && offending_pair)
      os << "generators " << offending_pair->first + 1 << " and " << offending_pair->second + 1
         << " do not commute";
    if (!phase_consistent && offending_kernel_vector) {
      if (!commuting) os << "; ";
      os << "group contains a nontrivial multiple of the identity (exponents";
      for (Int v : *offending_kernel_vector) os << ' ' << v;
      os << ')';
    }
    return os.str();
  }
};

/// A presentation stabilizes a nonzero subspace iff its generators pairwise
/// commute and the group holds no w^lambda I with lambda != 0. The second
/// condition is checked on generators of the integer relation lattice
/// {a : a.S == 0 mod D}: a basis of the Z_D kernel, plus D e_i for every i
/// (g^D need not be I for even D).
inline ValidityReport is_valid(const StabilizerPresentation& s) {
  ValidityReport report;
  const std::size_t k = s.num_generators();
  const auto gens = s.to_generators();
  for (std::size_t i = 0; i < k && report.commuting; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!commutes(gens[i], gens[j])) {
        report.commuting = false;
        report.offending_pair = {i, j};
        break;
      }

  std::vector<std::vector<Int>> relations;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> e(k, 0);
    e[i] = s.dim();
    relations.push_back(std::move(e));
  }
  const auto sol = solve_linear(s.matrix(), std::vector<Int>(2 * s.num_qudits(), 0));
  relations.insert(relations.end(), sol.kernel.begin(), sol.kernel.end());
  for (const auto& a : relations) {
    const PauliProduct p = element_from_exponents(s, a);
    if (!p.is_identity()) {
      report.phase_consistent = false;
      report.offending_kernel_vector = a;
      break;
    }
  }
  return report;
}

inline void require_valid(const StabilizerPresentation& s) {
  const auto report = is_valid(s);
  if (!report.valid()) throw InvalidStabilizer(report.describe());
}

/// Invariant factors D / gcd(d_i, D) of the group, from the Smith diagonal
/// of the parity-check matrix. Factors equal to 1 are omitted.
inline std::vector<Int> group_order_factors(const StabilizerPresentation& s) {
  require_valid(s);
  const auto dec = smith_normal_form(s.matrix());
  std::vector<Int> factors;
  for (Int d : dec.diagonal()) {
    const Int f = s.dim() / s.modulus().gcd_with(d);
    if (f != 1) factors.push_back(f);
  }
  return factors;
}

namespace detail {
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("group size exceeds 64 bits");
  return out;
}
inline std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}
}  // namespace detail

/// |S|.
inline std::uint64_t group_order(const StabilizerPresentation& s) {
  std::uint64_t order = 1;
  for (Int f : group_order_factors(s)) order = detail::checked_mul(order, static_cast<std::uint64_t>(f));
  return order;
}

/// K = D^n / |S|, the dimension of the stabilized subspace.
inline std::uint64_t code_dimension(const StabilizerPresentation& s) {
  const std::uint64_t order = group_order(s);
  const std::uint64_t total = detail::checked_pow(static_cast<std::uint64_t>(s.dim()), s.num_qudits());
  if (total % order != 0) throw InternalError("group order does not divide D^n");
  return total / order;
}

/// Membership including the phase.
inline bool contains(const StabilizerPresentation& s, const PauliProduct& p) {
  require_valid(s);
  if (!(p.modulus() == s.modulus()) || p.num_qudits() != s.num_qudits())
    throw DimensionMismatch("Pauli product does not match presentation shape");
  std::vector<Int> target(p.x());
  target.insert(target.end(), p.z().begin(), p.z().end());
  const auto sol = solve_linear(s.matrix(), target);
  if (!sol.particular) return false;
  return element_from_exponents(s, *sol.particular).phase() == p.phase();
}

inline bool group_equal(const StabilizerPresentation& a, const StabilizerPresentation& b) {
  if (!(a.modulus() == b.modulus()) || a.num_qudits() != b.num_qudits())
    throw DimensionMismatch("presentations differ in (D, n)");
  if (group_order(a) != group_order(b)) return false;
  for (const auto& g : a.to_generators())
    if (!contains(b, g)) return false;
  return true;
}

}  // namespace quditstab
