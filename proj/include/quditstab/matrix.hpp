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

#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "quditstab/modring.hpp"

namespace quditstab {

/// Dense row-major matrix over Z_D. Entries are kept canonical.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Modulus mod)
      : rows_(rows), cols_(cols), mod_(mod), data_(rows * cols, 0) {}

  Matrix(std::size_t rows, std::size_t cols, Modulus mod,
         const std::vector<std::vector<Int>>& values)
      : Matrix(rows, cols, mod) {
    if (values.size() != rows) throw DimensionMismatch("row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
      if (values[i].size() != cols) throw DimensionMismatch("column count mismatch");
      for (std::size_t j = 0; j < cols; ++j) set(i, j, values[i][j]);
    }
  }

  static Matrix identity(std::size_t size, Modulus mod) {
    Matrix m(size, size, mod);
    for (std::size_t i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Modulus& modulus() const { return mod_; }

  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Int v) { data_[i * cols_ + j] = mod_.reduce(v); }

  std::span<const Int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexOutOfRange("block exceeds matrix");
    Matrix b(nr, nc, mod_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b.set(i, j, (*this)(r0 + i, c0 + j));
    return b;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, mod_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  bool is_zero() const {
    for (Int v : data_)
      if (v != 0) return false;
    return true;
  }

  /// True iff every entry off the main diagonal is zero.
  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && (*this)(i, j) != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_ || !(a.mod_ == b.mod_))
      throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, a.mod_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c.data_[i * c.cols_ + j] = a.mod_.add(c(i, j), a.mod_.mul(aik, b(k, j)));
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << '[';
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Modulus mod_;
  std::vector<Int> data_;
};

/// Row vector times matrix: returns v * A over Z_D.
inline std::vector<Int> row_times(std::span<const Int> v, const Matrix& a) {
  if (v.size() != a.rows()) throw DimensionMismatch("vector length mismatch");
  const auto& mod = a.modulus();
  std::vector<Int> out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (mod.reduce(v[i]) == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] = mod.add(out[j], mod.mul(v[i], a(i, j)));
  }
  return out;
}

}  // namespace quditstab
