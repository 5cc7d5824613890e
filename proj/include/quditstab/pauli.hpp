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

// Generalized Pauli products w^phase X^x Z^z on n qudits of dimension D.

#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quditstab/errors.hpp"
#include "quditstab/modring.hpp"

namespace quditstab {

/// w^phase * X_1^x_1 Z_1^z_1 (x) ... (x) X_n^x_n Z_n^z_n, with w = exp(2 pi i / D)
/// and, on every qudit, the X power written to the left of the Z power.
/// X|j> = |j-1>, Z|j> = w^j |j>, so XZ = w ZX.
class PauliProduct {
 public:
  PauliProduct(Modulus mod, std::size_t n) : mod_(mod), x_(n, 0), z_(n, 0) {
    if (n == 0) throw DimensionMismatch("a Pauli product needs at least one qudit");
  }

  PauliProduct(Modulus mod, Int phase, std::vector<Int> x, std::vector<Int> z)
      : mod_(mod), phase_(mod.reduce(phase)), x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size() || x_.empty())
      throw DimensionMismatch("X and Z exponent vectors must have equal nonzero length");
    for (auto& v : x_) v = mod_.reduce(v);
    for (auto& v : z_) v = mod_.reduce(v);
  }

  static PauliProduct identity(Modulus mod, std::size_t n) { return PauliProduct(mod, n); }

  /// X_q^e on qudit q (0-based).
  static PauliProduct x_on(Modulus mod, std::size_t n, std::size_t q, Int e = 1) {
    PauliProduct p(mod, n);
    p.x_.at(q) = mod.reduce(e);
    return p;
  }
  static PauliProduct z_on(Modulus mod, std::size_t n, std::size_t q, Int e = 1) {
    PauliProduct p(mod, n);
    p.z_.at(q) = mod.reduce(e);
    return p;
  }

  const Modulus& modulus() const { return mod_; }
  Int dim() const { return mod_.value(); }
  std::size_t num_qudits() const { return x_.size(); }
  Int phase() const { return phase_; }
  const std::vector<Int>& x() const { return x_; }
  const std::vector<Int>& z() const { return z_; }

  void set_phase(Int phase) { phase_ = mod_.reduce(phase); }
  void set_x(std::size_t q, Int v) { x_.at(q) = mod_.reduce(v); }
  void set_z(std::size_t q, Int v) { z_.at(q) = mod_.reduce(v); }

  /// Identity operator, phase included.
  bool is_identity() const { return phase_ == 0 && is_scalar(); }
  /// w^phase times the identity.
  bool is_scalar() const {
    for (std::size_t q = 0; q < x_.size(); ++q)
      if (x_[q] != 0 || z_[q] != 0) return false;
    return true;
  }

  friend bool operator==(const PauliProduct&, const PauliProduct&) = default;

 private:
  Modulus mod_;
  Int phase_ = 0;
  std::vector<Int> x_;
  std::vector<Int> z_;
};

inline void require_compatible(const PauliProduct& a, const PauliProduct& b) {
  if (!(a.modulus() == b.modulus()) || a.num_qudits() != b.num_qudits()) {
    throw DimensionMismatch("Pauli products differ in shape: (D=" + std::to_string(a.dim()) +
                            ", n=" + std::to_string(a.num_qudits()) + ") vs (D=" +
                            std::to_string(b.dim()) + ", n=" + std::to_string(b.num_qudits()) +
                            ")");
  }
}

/// Dot product over Z_D.
inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b, const Modulus& mod) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = mod.add(s, mod.mul(a[i], b[i]));
  return s;
}

/// Canonical form of p1 * p2. Moving Z^z1 past X^x2 on each qudit costs
/// w^(-z1.x2), since Z^a X^b = w^(-ab) X^b Z^a.
inline PauliProduct multiply(const PauliProduct& p1, const PauliProduct& p2) {
  require_compatible(p1, p2);
  const auto& mod = p1.modulus();
  const std::size_t n = p1.num_qudits();
  std::vector<Int> x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x[q] = mod.add(p1.x()[q], p2.x()[q]);
    z[q] = mod.add(p1.z()[q], p2.z()[q]);
  }
  const Int phase = mod.sub(mod.add(p1.phase(), p2.phase()), dot(p1.z(), p2.x(), mod));
  return PauliProduct(mod, phase, std::move(x), std::move(z));
}

inline PauliProduct operator*(const PauliProduct& a, const PauliProduct& b) {
  return multiply(a, b);
}

/// lambda with p1 p2 = w^lambda p2 p1; equals x1.z2 - z1.x2 mod D.
inline Int commutation_phase(const PauliProduct& p1, const PauliProduct& p2) {
  require_compatible(p1, p2);
  const auto& mod = p1.modulus();
  return mod.sub(dot(p1.x(), p2.z(), mod), dot(p1.z(), p2.x(), mod));
}

inline bool commutes(const PauliProduct& p1, const PauliProduct& p2) {
  return commutation_phase(p1, p2) == 0;
}

/// p^m for an integer m >= 0. The result depends on m itself, not only on
/// m mod D: (XZ)^2 = w^-1 I when D = 2.
inline PauliProduct power(const PauliProduct& p, Int m) {
  if (m < 0) throw Error("negative Pauli power");
  PauliProduct result = PauliProduct::identity(p.modulus(), p.num_qudits());
  PauliProduct base = p;
  while (m > 0) {
    if (m & 1) result = multiply(result, base);
    m >>= 1;
    if (m > 0) base = multiply(base, base);
  }
  return result;
}

/// Smallest m >= 1 with p^m = I, found by iteration. Orders can exceed D for
/// even D; every order is at most 2D.
inline Int order(const PauliProduct& p) {
  const Int cap = 2 * p.dim() * p.dim();
  PauliProduct acc = p;
  for (Int m = 1; m <= cap; ++m) {
    if (acc.is_identity()) return m;
    acc = multiply(acc, p);
  }
  throw InternalError("Pauli order iteration exceeded its cap");
}

namespace detail {

inline bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  Int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    if (v > (Int{1} << 55)) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = negative ? -v : v;
  return true;
}

}  // namespace detail

/// Parses text such as "w^2 X1^3 Z2^2". Tokens are whitespace separated:
/// "I", "w" or "w^e", "X<i>" or "X<i>^e", "Z<i>" or "Z<i>^e" with 1-based
/// qudit labels. Factors multiply left to right as operators, so "Z1 X1"
/// yields w^-1 X1 Z1.
inline PauliProduct parse_pauli(std::string_view text, const Modulus& mod, std::size_t n) {
  PauliProduct acc = PauliProduct::identity(mod, n);
  std::size_t pos = 0;
  bool saw_token = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view tok = text.substr(start, pos - start);
    saw_token = true;

    const char head = tok[0];
    if (tok == "I") continue;
    if (head != 'w' && head != 'X' && head != 'Z')
      throw SyntaxError("unexpected token '" + std::string(tok) + "'", start);

    const std::size_t caret = tok.find('^');
    const std::string_view label = tok.substr(1, caret == std::string_view::npos ? tok.size() - 1 : caret - 1);
    Int exponent = 1;
    if (caret != std::string_view::npos &&
        !detail::parse_int(tok.substr(caret + 1), exponent))
      throw SyntaxError("bad exponent in '" + std::string(tok) + "'", start + caret + 1);

    if (head == 'w') {
      if (!label.empty()) throw SyntaxError("phase token takes no qudit label", start + 1);
      acc.set_phase(acc.phase() + mod.reduce(exponent));
      continue;
    }
    Int qudit = 0;
    if (label.empty() || label[0] == '-' || label[0] == '+' || !detail::parse_int(label, qudit))
      throw SyntaxError("missing or bad qudit label in '" + std::string(tok) + "'", start + 1);
    if (qudit < 1 || static_cast<std::size_t>(qudit) > n)
      throw IndexOutOfRange("qudit label " + std::to_string(qudit) + " outside 1.." +
                            std::to_string(n));
    const auto q = static_cast<std::size_t>(qudit - 1);
    const PauliProduct factor = head == 'X' ? PauliProduct::x_on(mod, n, q, exponent)
                                            : PauliProduct::z_on(mod, n, q, exponent);
    acc = multiply(acc, factor);
  }
  if (!saw_token) throw SyntaxError("empty Pauli product", 0);
  return acc;
}

inline std::string format_pauli(const PauliProduct& p) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (p.phase() != 0) {
    sep();
    os << "w^" << p.phase();
  }
  for (std::size_t q = 0; q < p.num_qudits(); ++q) {
    if (p.x()[q] != 0) {
      sep();
      os << 'X' << q + 1;
      if (p.x()[q] != 1) os << '^' << p.x()[q];
    }
    if (p.z()[q] != 0) {
      sep();
      os << 'Z' << q + 1;
      if (p.z()[q] != 1) os << '^' << p.z()[q];
    }
  }
  if (first) os << 'I';
  return os.str();
}

/// Hash over (phase, x, z) for use in unordered containers.
struct PauliHash {
  std::size_t operator()(const PauliProduct& p) const {
    std::size_t h = std::hash<Int>{}(p.phase());
    auto mix = [&h](Int v) { h ^= std::hash<Int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (Int v : p.x()) mix(v);
    for (Int v : p.z()) mix(v);
    return h;
  }
};

}  // namespace quditstab
