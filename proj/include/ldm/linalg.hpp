#pragma once

// Dense exact linear algebra over an ldm::Field.

#include <cstddef>
#include <optional>
#include <vector>

#include "ldm/field.hpp"

namespace ldm {

using Vector = std::vector<Element>;

class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(FieldPtr field, const std::vector<Vector>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field() const noexcept { return field_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector operator*(const Vector& v) const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot in each step is the topmost nonzero
/// entry of the leftmost remaining column. The result is canonical.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column in increasing column
/// order, with a 1 in its own free column.
std::vector<Vector> null_space(const Matrix& m);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

Element determinant(const Matrix& m);
Element det3(const Vector& a, const Vector& b, const Vector& c);
Vector cross(const Vector& a, const Vector& b);
Element dot(const Vector& a, const Vector& b);

}  // namespace ldm
