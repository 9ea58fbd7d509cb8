#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nambu/scalar.hpp"

namespace nambu {

using Vec = std::vector<Scalar>;

Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

/// Dense row-major matrix of Scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  void set_row(size_t i, const Vec& v);
  void set_col(size_t j, const Vec& v);
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Stacks the rows of b under a; column counts must agree.
  static Matrix vstack(const Matrix& a, const Matrix& b);
  std::string str() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);

/// Solves A x = b. Free variables are set to zero, which gives the
/// lexicographically minimal solution in the pivot sense. nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Subspace of K^n in canonical form: rows of an rref matrix with no zero rows.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : basis_(0, ambient) {}
  static Subspace span(size_t ambient, const std::vector<Vec>& vectors);
  static Subspace from_rows(const Matrix& rows);
  static Subspace full(size_t ambient);
  static Subspace zero(size_t ambient) { return Subspace(ambient); }

  size_t ambient() const { return basis_.cols(); }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> vectors() const;
  Vec vector(size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Annihilator under the standard dot product: {y | y.v = 0 for v here}.
  Subspace annihilator() const;
  /// Coordinates of v in this basis; nullopt if v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Indices of standard basis vectors that complete this basis, lex-first.
  std::vector<size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
};

Subspace nullspace(const Matrix& m);
/// Image of the subspace s under m (m acts on column vectors).
Subspace image(const Matrix& m, const Subspace& s);
/// Column space of m.
Subspace column_space(const Matrix& m);
/// {x | m x in s}
Subspace preimage(const Matrix& m, const Subspace& s);
/// {x | v^T G x = 0 for all v in s}
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram);

/// Characteristic polynomial coefficients c_0..c_n of det(tI - m), c_n = 1.
std::vector<Scalar> charpoly(const Matrix& m);
/// Distinct rational roots of a polynomial with rational coefficients, ascending.
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs);

}  // namespace nambu
