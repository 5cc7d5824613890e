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

// Exact arithmetic in the residue ring Z_D.

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "quditstab/errors.hpp"

namespace quditstab {

/// Integer type used for residues and exponents. Products are formed in
/// 128-bit intermediates, so any modulus below 2^62 is exact.
using Int = std::int64_t;

struct ExtendedGcd {
  Int g;  // gcd(a, b) >= 0
  Int u;
  Int v;  // u * a + v * b == g
};

/// Extended Euclid. gcd(0, 0) is 0.
constexpr ExtendedGcd gcd_ext(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// The modulus D >= 2 of the ring Z_D. Every residue this class hands out
/// lies in the canonical range [0, D).
class Modulus {
 public:
  explicit Modulus(Int d) : d_(d) {
    if (d < 2) throw Error("modulus must be >= 2, got " + std::to_string(d));
  }

  Int value() const { return d_; }

  Int reduce(Int a) const {
    const Int r = a % d_;
    return r < 0 ? r + d_ : r;
  }
  Int add(Int a, Int b) const { return reduce(reduce(a) + reduce(b)); }
  Int sub(Int a, Int b) const { return reduce(reduce(a) - reduce(b)); }
  Int neg(Int a) const { return reduce(-reduce(a)); }
  Int mul(Int a, Int b) const {
    const __int128 p = static_cast<__int128>(reduce(a)) * reduce(b);
    return static_cast<Int>(p % d_);
  }

  /// gcd(a, D), with gcd(0, D) == D.
  Int gcd_with(Int a) const { return std::gcd(reduce(a), d_); }

  bool is_unit(Int q) const { return gcd_with(q) == 1; }

  Int inverse(Int q) const {
    const Int r = reduce(q);
    const auto e = gcd_ext(r, d_);
    if (e.g != 1) {
      throw NotAUnit(std::to_string(r) + " is not invertible mod " +
                     std::to_string(d_));
    }
    return reduce(e.u);
  }

  /// True iff b lies in the ideal generated by a, i.e. gcd(a, D) | b.
  bool in_ideal(Int b, Int a) const { return reduce(b) % gcd_with(a) == 0; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Int d_;
};

inline bool is_unit(Int q, const Modulus& mod) { return mod.is_unit(q); }
inline Int inverse(Int q, const Modulus& mod) { return mod.inverse(q); }

/// Returns c in [0, D) with gcd(a + c*b mod D, D) == gcd(a, b, D).
///
/// Write g = gcd(a, b, D), N = D/g, a = g*a', b = g*b'. The largest divisor c
/// of N coprime to a' contains every prime of N missing from a', and no prime
/// of a'. For p | N: if p | a' then p does not divide b' or c, so p does not
/// divide a' + c*b'; otherwise p | c and a' + c*b' == a' mod p. Hence
/// gcd(a' + c*b', N) == 1.
inline Int stab_coeff(Int a, Int b, const Modulus& mod) {
  const Int d = mod.value();
  a = mod.reduce(a);
  b = mod.reduce(b);
  const Int g = std::gcd(std::gcd(a, b), d);
  const Int n = d / g;
  const Int a_red = a / g;
  Int c = n;
  for (Int h = std::gcd(c, a_red); h > 1; h = std::gcd(c, a_red)) c /= h;
  return c % n;
}

/// For a nonzero residue a with g = gcd(a, D), returns a unit u with
/// a*u == g mod D. Used to put Smith diagonal entries in divisor form.
inline Int unit_normalizer(Int a, const Modulus& mod) {
  a = mod.reduce(a);
  const Int d = mod.value();
  const Int g = std::gcd(a, d);
  if (g == d) return 1;
  const Modulus quotient(d / g);
  const Int u0 = quotient.inverse(a / g);
  const Int c = stab_coeff(u0, d / g, mod);
  return mod.add(u0, mod.mul(c, d / g));
}

}  // namespace quditstab
