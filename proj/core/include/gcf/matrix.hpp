// Copyright 2026 The gcf Authors
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

#ifndef GCF_MATRIX_HPP
#define GCF_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gcf/field.hpp"
#include "gcf/poly.hpp"

namespace gcf {

using Vector = std::vector<FieldElem>;

/// Dense row-major matrix over a finite field.  Most of the library works
/// with square matrices; rectangular ones appear as linear systems.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, FieldElem(0)) {}

  static Matrix square(Field field, std::size_t n) { return Matrix(field, n, n); }
  static Matrix identity(Field field, std::size_t n);
  /// Rows given as integers mapped into the prime subfield.
  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  std::size_t size() const;

  FieldElem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FieldElem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::span<const FieldElem> data() const { return a_; }

  Vector column(std::size_t j) const;
  Vector apply(std::span<const FieldElem> v) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> a_;
};

Matrix scale(const Matrix& a, FieldElem c);
Matrix transpose(const Matrix& a);
FieldElem trace(const Matrix& a);
FieldElem determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);
std::size_t rank(Matrix a);
inline std::size_t nullity(const Matrix& a) { return a.cols() - rank(a); }
/// A basis of {v : a v = 0}.
std::vector<Vector> nullspace(Matrix a);
/// Some solution of a x = b, if one exists.
std::optional<Vector> solve(const Matrix& a, std::span<const FieldElem> b);

/// [p]: coordinates of p in the basis 1, X, ..., X^{n-1}.  Requires deg p < n.
Vector coordinates(const Poly& p, std::size_t n);

/// Companion matrix of a monic polynomial of degree >= 1: ones on the
/// subdiagonal, last column -f_0, ..., -f_{n-1}.
Matrix companion(const Poly& f);
/// Block-diagonal assembly.  Throws on an empty list or mixed fields.
Matrix direct_sum(std::span<const Matrix> blocks);
Matrix direct_sum(std::initializer_list<Matrix> blocks);
/// a on the diagonal, ones on the superdiagonal.
Matrix jordan_block(const Field& field, FieldElem a, std::size_t size);
/// g(A) by Horner's rule.
Matrix evaluate_poly(const Poly& g, const Matrix& a);

/// Matrix text format:
///   line 1: field, e.g. GF(3) or GF(2^2)
///   line 2: n
///   n lines of n whitespace-separated field element literals.
Matrix parse_matrix(std::string_view text);
std::string format_matrix(const Matrix& a);

}  // namespace gcf

#endif  // GCF_MATRIX_HPP
