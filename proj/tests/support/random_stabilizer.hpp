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

// Random instances and brute-force references shared by the test suites.
// Nothing here calls the Smith normal form.

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "quditstab.hpp"

namespace quditstab::testing {

using Rng = std::mt19937_64;

inline Int uniform(Rng& rng, Int lo, Int hi) {
  return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline std::vector<Int> divisors(Int d) {
  std::vector<Int> out;
  for (Int i = 1; i <= d; ++i)
    if (d % i == 0) out.push_back(i);
  return out;
}

inline Int random_unit(Rng& rng, const Modulus& mod) {
  for (;;) {
    const Int q = uniform(rng, 1, mod.value() - 1 > 0 ? mod.value() - 1 : 1);
    if (mod.is_unit(q)) return q;
  }
}

inline PauliProduct random_pauli(Rng& rng, const Modulus& mod, std::size_t n) {
  std::vector<Int> x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x[q] = uniform(rng, 0, mod.value() - 1);
    z[q] = uniform(rng, 0, mod.value() - 1);
  }
  return PauliProduct(mod, uniform(rng, 0, mod.value() - 1), x, z);
}

inline GateOp random_gate(Rng& rng, const Modulus& mod, std::size_t n) {
  const int kinds = n >= 2 ? 5 : 2;
  const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(n) - 1));
  std::size_t b = a;
  if (n >= 2)
    while (b == a) b = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(n) - 1));
  switch (uniform(rng, 0, kinds - 1)) {
    case 0: return GateOp::fourier(a);
    case 1: return GateOp::mult(random_unit(rng, mod), a);
    case 2: return GateOp::cnot(a, b, uniform(rng, 1, mod.value()));
    case 3: return GateOp::swap(a, b);
    default: return GateOp::cphase(a, b);
  }
}

/// A random valid presentation. Seeds per qudit are Z^d or the pair
/// X^d1, Z^d2 with d1 d2 == 0 mod D (phases multiples of the exponents so
/// that powers never produce a scalar), then random Clifford conjugation,
/// random row mixing and possibly redundant generators.
inline StabilizerPresentation random_valid_presentation(Rng& rng, Int d, std::size_t n) {
  const Modulus mod(d);
  const auto divs = divisors(d);
  std::vector<PauliProduct> gens;
  auto pick_div = [&] { return divs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(divs.size()) - 1))]; };
  for (std::size_t q = 0; q < n; ++q) {
    switch (uniform(rng, 0, 5)) {
      case 0: break;
      case 1:
      case 2: {
        const Int e = pick_div();
        if (e == d) break;
        auto p = PauliProduct::z_on(mod, n, q, e);
        p.set_phase(e * uniform(rng, 0, d / e - 1));
        gens.push_back(p);
        break;
      }
      default: {
        const Int e1 = pick_div();
        std::vector<Int> partners;
        for (Int e2 : divs)
          if ((e1 * e2) % d == 0) partners.push_back(e2);
        const Int e2 = partners[static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(partners.size()) - 1))];
        if (e1 != d) {
          auto p = PauliProduct::x_on(mod, n, q, e1);
          p.set_phase(e1 * uniform(rng, 0, d / e1 - 1));
          gens.push_back(p);
        }
        if (e2 != d) {
          auto p = PauliProduct::z_on(mod, n, q, e2);
          p.set_phase(e2 * uniform(rng, 0, d / e2 - 1));
          gens.push_back(p);
        }
      }
    }
  }
  if (gens.empty()) gens.push_back(PauliProduct::identity(mod, n));

  const auto gate_count = uniform(rng, static_cast<Int>(n), 3 * static_cast<Int>(n) + 2);
  for (Int i = 0; i < gate_count; ++i) {
    const auto g = random_gate(rng, mod, n);
    for (auto& p : gens) p = conjugate_pauli(g, p);
  }

  auto s = StabilizerPresentation::from_generators(gens);
  const std::size_t k = s.num_generators();
  if (k >= 2) {
    const auto mixes = uniform(rng, 0, 4);
    for (Int i = 0; i < mixes; ++i) {
      const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(k) - 1));
      auto b = a;
      while (b == a) b = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(k) - 1));
      switch (uniform(rng, 0, 2)) {
        case 0: s = row_add(s, a, b, uniform(rng, 1, d - 1)); break;
        case 1: s = row_swap(s, a, b); break;
        default: s = row_scale(s, a, random_unit(rng, mod)); break;
      }
    }
  }

  gens = s.to_generators();
  while (gens.size() < 2 * n && uniform(rng, 0, 2) == 0) {
    PauliProduct extra = PauliProduct::identity(mod, n);
    for (const auto& g : gens) extra = multiply(extra, power(g, uniform(rng, 0, d - 1)));
    const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<Int>(gens.size())));
    gens.insert(gens.begin() + static_cast<std::ptrdiff_t>(pos), extra);
  }
  return StabilizerPresentation::from_generators(gens);
}

inline Matrix random_matrix(Rng& rng, const Modulus& mod, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols, mod);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, uniform(rng, 0, mod.value() - 1));
  return m;
}

/// Size of the Z_D span of the rows, by closure; nullopt beyond `cap`.
inline std::optional<std::size_t> brute_row_span_size(const Matrix& a, std::size_t cap) {
  const auto& mod = a.modulus();
  std::set<std::vector<Int>> span{std::vector<Int>(a.cols(), 0)};
  std::vector<std::vector<Int>> frontier{std::vector<Int>(a.cols(), 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Int> w(v);
        for (std::size_t j = 0; j < a.cols(); ++j) w[j] = mod.add(w[j], a(i, j));
        if (span.insert(w).second) {
          if (span.size() > cap) return std::nullopt;
          next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return span.size();
}

/// All a in Z_D^k with a.A == b, by enumeration. Only for tiny k and D.
inline std::vector<std::vector<Int>> brute_solutions(const Matrix& a, const std::vector<Int>& b) {
  const auto& mod = a.modulus();
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(a.rows(), 0);
  for (;;) {
    if (row_times(v, a) == b) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == mod.value()) v[i++] = 0;
    if (i == v.size()) break;
  }
  return out;
}

/// D values and qudit counts with D^n <= bound.
struct Shape {
  Int d;
  std::size_t n;
};

inline std::vector<Shape> shapes(const std::vector<Int>& dims, std::size_t max_n, std::size_t bound) {
  std::vector<Shape> out;
  for (Int d : dims) {
    std::size_t size = 1;
    for (std::size_t n = 1; n <= max_n; ++n) {
      size *= static_cast<std::size_t>(d);
      if (size > bound) break;
      out.push_back({d, n});
    }
  }
  return out;
}

}  // namespace quditstab::testing
