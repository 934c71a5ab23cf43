#include "interdec/matrix.hpp"

#include <algorithm>

#include "interdec/error.hpp"

namespace interdec {

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row of length " + std::to_string(r.size()) + " in a matrix with " + std::to_string(cols) + " columns");
    }
    Vector reduced;
    reduced.reserve(cols);
    for (const auto& x : r) reduced.push_back(field.from_rational(x));
    m.append_row(reduced);
  }
  return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, "appending a row of the wrong length");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different widths");
  if (!(below.field_ == field_)) throw Error(ErrorCode::FieldMismatch, "stacking matrices over different fields");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(n * cols_);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (Field::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

EchelonForm echelonize(Matrix m) {
  const Field field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && Field::is_zero(m(found, col))) ++found;
    if (found == m.rows()) continue;
    m.swap_rows(pivot_row, found);

    const Scalar scale = field.inv(m(pivot_row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) = field.mul(m(pivot_row, c), scale);

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || Field::is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) field.sub_mul(m(r, c), factor, m(pivot_row, c));
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelonize(m).reduced; }

std::size_t rank(const Matrix& m) { return echelonize(m).pivots.size(); }

Vector EchelonBuilder::residual(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match the ambient dimension");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar factor = r[pivots_[i]];
    if (Field::is_zero(factor)) continue;
    for (std::size_t c = 0; c < dim_; ++c) field_.sub_mul(r[c], factor, rows_[i][c]);
  }
  return r;
}

bool EchelonBuilder::in_span(std::span<const Scalar> v) const { return is_zero_vector(residual(v)); }

bool EchelonBuilder::insert(std::span<const Scalar> v) {
  Vector r = residual(v);
  auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& x) { return !Field::is_zero(x); });
  if (lead == r.end()) return false;
  const Scalar scale = field_.inv(*lead);
  for (auto& x : r) x = field_.mul(x, scale);
  pivots_.push_back(static_cast<std::size_t>(lead - r.begin()));
  rows_.push_back(std::move(r));
  return true;
}

std::optional<Vector> solve_row_combination(const Matrix& rows, std::span<const Scalar> target) {
  if (target.size() != rows.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "target length does not match the row width");
  }
  const Field& field = rows.field();
  // Augmented system [rows^T | target]: one equation per coordinate.
  const std::size_t unknowns = rows.rows();
  Matrix system(field, rows.cols(), unknowns + 1);
  for (std::size_t c = 0; c < rows.cols(); ++c) {
    for (std::size_t r = 0; r < unknowns; ++r) system(c, r) = rows(r, c);
    system(c, unknowns) = target[c];
  }
  EchelonForm ef = echelonize(std::move(system));
  if (!ef.pivots.empty() && ef.pivots.back() == unknowns) return std::nullopt;

  Vector coeffs(unknowns);
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) coeffs[ef.pivots[i]] = ef.reduced(i, unknowns);
  return coeffs;
}

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_rational()) {
    return Scalar(static_cast<long>(rng() % 9) - 4);
  }
  // Enough random bits to make the bias of the final reduction negligible.
  const std::size_t words = mpz_sizeinbase(field.modulus().get_mpz_t(), 2) / 64 + 2;
  mpz_class acc = 0;
  for (std::size_t i = 0; i < words; ++i) {
    acc <<= 64;
    acc += mpz_class(static_cast<unsigned long>(rng()));
  }
  return Scalar(mpz_class(acc % field.modulus()));
}

Matrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_scalar(field, rng);
    if (rank(m) == n) return m;
  }
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return Field::is_zero(x); });
}

}  // namespace interdec

namespace interdec {

std::string format_vector(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace interdec
