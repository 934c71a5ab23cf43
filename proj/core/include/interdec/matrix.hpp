#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "interdec/field.hpp"

namespace interdec {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact Field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix from row vectors; every row must have `cols` entries.
  /// Entries are reduced into the field.
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> values);
  void swap_rows(std::size_t a, std::size_t b);
  /// Rows of *this followed by rows of `below`.
  Matrix stacked(const Matrix& below) const;
  /// Keeps only the first n rows.
  void truncate_rows(std::size_t n);

  Matrix operator*(const Matrix& rhs) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;                   // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The first nonzero entry in each column is used
/// as the pivot, so the result is a pure function of the input.
EchelonForm echelonize(Matrix m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Maintains a semi-echelon basis: each stored row has a distinct pivot
/// column with entry 1, and every later row is zero at earlier pivots.
class EchelonBuilder {
 public:
  EchelonBuilder(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  /// v minus its projection onto the stored span along the pivot columns;
  /// zero iff v lies in the span.
  Vector residual(std::span<const Scalar> v) const;
  bool in_span(std::span<const Scalar> v) const;
  /// Adds v if independent of the stored rows; returns whether it was added.
  bool insert(std::span<const Scalar> v);

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coefficients c with sum_i c_i * rows.row(i) == target, or nullopt when
/// target is outside the row space. When the rows are independent the
/// answer is unique; otherwise free coefficients are set to zero.
std::optional<Vector> solve_row_combination(const Matrix& rows, std::span<const Scalar> target);

/// A uniformly drawn field element for GF(p); a small integer in [-4, 4]
/// for Q. Uses only the raw engine output so sequences are portable.
Scalar random_scalar(const Field& field, std::mt19937_64& rng);
/// Random n x n matrix of full rank (rejection sampling).
Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng);

bool is_zero_vector(std::span<const Scalar> v);
/// "(1, -1/2, 0)"
std::string format_vector(std::span<const Scalar> v);

}  // namespace interdec
