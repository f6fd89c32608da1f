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

#include "gcf/matrix.hpp"

#include <cctype>
#include <sstream>

#include "gcf/error.hpp"
#include "gcf/text.hpp"

namespace gcf {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw DomainError("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
}

}  // namespace

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

std::size_t Matrix::size() const {
  if (!is_square()) throw DomainError("matrix is not square");
  return rows_;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(std::span<const FieldElem> v) const {
  if (v.size() != cols_) throw DomainError("vector length mismatch");
  Vector out(rows_, FieldElem(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElem acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.field_.sub(a.a_[i], b.a_[i]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw DomainError("matrices over different fields");
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  const Field& F = a.field_;
  Matrix out(F, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(aik, b(k, j)));
    }
  return out;
}

Matrix scale(const Matrix& a, FieldElem c) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.field().mul(a(i, j), c);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

FieldElem trace(const Matrix& a) {
  FieldElem acc = a.field().zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = a.field().add(acc, a(i, i));
  return acc;
}

FieldElem determinant(Matrix a) {
  const Field& F = a.field();
  const std::size_t n = a.size();
  FieldElem det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = F.neg(det);
    }
    const FieldElem p = a(col, col);
    det = F.mul(det, p);
    const FieldElem pinv = F.inv(p);
    for (std::size_t i = col + 1; i < n; ++i) {
      const FieldElem factor = F.mul(a(i, col), pinv);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) a(i, j) = F.sub(a(i, j), F.mul(factor, a(col, j)));
    }
  }
  return det;
}

std::vector<std::size_t> row_reduce(Matrix& a) {
  const Field& F = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const FieldElem pinv = F.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = F.mul(a(row, j), pinv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      const FieldElem factor = a(i, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix a) { return row_reduce(a).size(); }

std::vector<Vector> nullspace(Matrix a) {
  const Field& F = a.field();
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, std::span<const FieldElem> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length mismatch");
  const Field& F = a.field();
  Matrix aug(F, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), F.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  const Field& F = a.field();
  const std::size_t n = a.size();
  Matrix aug(F, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F.one();
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Vector coordinates(const Poly& p, std::size_t n) {
  if (p.degree() >= static_cast<int>(n)) throw DomainError("polynomial degree too large for coordinates");
  Vector v(n, FieldElem(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
  return v;
}

Matrix companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("companion matrix needs a monic nonconstant polynomial");
  const Field& F = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  Matrix c = Matrix::square(F, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = F.one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = F.neg(f.coeff(i));
  return c;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DomainError("direct sum of an empty block list");
  const Field& F = blocks.front().field();
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == F)) throw DomainError("direct sum of matrices over different fields");
    n += b.size();
  }
  Matrix out = Matrix::square(F, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return out;
}

Matrix direct_sum(std::initializer_list<Matrix> blocks) {
  return direct_sum(std::span<const Matrix>(blocks.begin(), blocks.size()));
}

Matrix jordan_block(const Field& field, FieldElem a, std::size_t size) {
  if (size == 0) throw DomainError("Jordan block of size 0");
  Matrix j = Matrix::square(field, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = a;
    if (i + 1 < size) j(i, i + 1) = field.one();
  }
  return j;
}

Matrix evaluate_poly(const Poly& g, const Matrix& a) {
  if (!(g.field() == a.field())) throw DomainError("polynomial and matrix over different fields");
  const Field& F = a.field();
  const std::size_t n = a.size();
  Matrix acc = Matrix::square(F, n);
  for (std::size_t k = g.coeffs().size(); k-- > 0;) {
    acc = acc * a;
    const FieldElem c = g.coeffs()[k];
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = F.add(acc(i, i), c);
  }
  return acc;
}

namespace {

// Whitespace-separated tokens, keeping parenthesized groups together.
std::vector<std::string> tokenize_row(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : line) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(ch)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.size() < 2) throw ParseError("matrix file needs a field line and a size line");
  const Field F = parse_field(lines[0]);
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(lines[1], &used);
    if (lines[1].find_first_not_of(" \t\r", used) != std::string::npos) throw ParseError("bad size");
  } catch (const std::logic_error&) {
    throw ParseError("matrix size line is not an integer: " + lines[1]);
  }
  if (n == 0) throw ParseError("matrix size must be positive");
  if (lines.size() != n + 2) throw ParseError("expected " + std::to_string(n) + " matrix rows");
  Matrix m = Matrix::square(F, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tokens = tokenize_row(lines[i + 2]);
    if (tokens.size() != n) throw ParseError("row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_elem(F, tokens[j]);
  }
  return m;
}

std::string format_matrix(const Matrix& a) {
  std::string out = format_field(a.field()) + '\n' + std::to_string(a.size()) + '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_elem(a.field(), a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace gcf
