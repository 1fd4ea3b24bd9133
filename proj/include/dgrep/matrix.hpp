#pragma once

#include <cstddef>
#include <vector>

#include "dgrep/ring.hpp"

namespace dgrep {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix with exact entries. Matrices act on column vectors:
/// a map from a rank-c module to a rank-r module is an r x c matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

// Ring-aware arithmetic. All results are reduced to canonical form.
Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix subtract(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& ring, const Scalar& s, const Matrix& a);
Matrix reduce(const Ring& ring, const Matrix& a);

Vector apply(const Ring& ring, const Matrix& a, const Vector& v);
Vector add(const Ring& ring, const Vector& a, const Vector& b);
Vector subtract(const Ring& ring, const Vector& a, const Vector& b);
Vector scale(const Ring& ring, const Scalar& s, const Vector& v);
Vector reduce(const Ring& ring, const Vector& v);
/// Adds s * v into acc in place (no reduction; call reduce afterwards).
void axpy(Vector& acc, const Scalar& s, const Vector& v);
bool is_zero(const Vector& v);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace dgrep
