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

// Small dense complex operators on (C^D)^(x)n for brute-force verification.
// Basis index of |j_1 ... j_n> is sum_q j_q D^(n-1-q): qudit 1 is the most
// significant digit.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "quditstab/errors.hpp"
#include "quditstab/modring.hpp"

namespace quditstab {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOracleBound = 256;
inline constexpr std::size_t kMaxOracleBound = 1024;

/// D^n, or throws OracleTooLarge if it exceeds `bound`.
inline std::size_t dense_dimension(Int d, std::size_t n, std::size_t bound = kDefaultOracleBound) {
  if (bound > kMaxOracleBound) bound = kMaxOracleBound;
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n; ++i) {
    dim *= static_cast<std::size_t>(d);
    if (dim > bound)
      throw OracleTooLarge("D^n exceeds dense oracle bound " + std::to_string(bound));
  }
  return dim;
}

/// w^k with w = exp(2 pi i / D).
inline Complex root_of_unity(Int d, Int k) {
  const Int r = ((k % d) + d) % d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

class DenseOperator {
 public:
  explicit DenseOperator(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static DenseOperator identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  DenseOperator adjoint() const {
    DenseOperator a(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) a(j, i) = std::conj((*this)(i, j));
    return a;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  DenseOperator& operator+=(const DenseOperator& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  DenseOperator& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("dense operator size mismatch");
    const std::size_t n = a.dim_;
    DenseOperator c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) c.data_[i * n + j] += aik * b(k, j);
      }
    return c;
  }

  friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  /// Largest entrywise modulus; the distance used by every tolerance check.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

inline double max_abs_diff(const DenseOperator& a, const DenseOperator& b) { return (a - b).max_abs(); }

/// Digits of a basis index, qudit 0 first.
inline std::vector<Int> basis_digits(std::size_t index, Int d, std::size_t n) {
  std::vector<Int> digits(n);
  for (std::size_t q = n; q-- > 0;) {
    digits[q] = static_cast<Int>(index % static_cast<std::size_t>(d));
    index /= static_cast<std::size_t>(d);
  }
  return digits;
}

inline std::size_t basis_index(const std::vector<Int>& digits, Int d) {
  std::size_t index = 0;
  for (Int v : digits) index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(((v % d) + d) % d);
  return index;
}

}  // namespace quditstab
