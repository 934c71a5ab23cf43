#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interdec/matrix.hpp"

namespace interdec {

/// A subspace of F^d stored by its reduced row-echelon basis.
///
/// The stored basis is canonical: two Subspace values describe the same set
/// of vectors exactly when their bases compare equal entry by entry, so
/// operator== is set equality.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient_dim);
  static Subspace full(const Field& field, std::size_t ambient_dim);
  /// Span of the rows of `generators`; throws DimensionMismatch when the
  /// column count differs from ambient_dim or the fields disagree.
  static Subspace from_generators(const Field& field, std::size_t ambient_dim, const Matrix& generators);
  static Subspace span(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& generators);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Membership of a single vector.
  bool contains(std::span<const Scalar> v) const;
  /// v reduced against the basis; zero iff v is in the subspace.
  Vector residual(std::span<const Scalar> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& w);
/// Sum of a family; `parts` must be nonempty or the field/ambient given.
Subspace sum(std::span<const Subspace> parts, const Field& field, std::size_t ambient_dim);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& u, const Subspace& w);
/// w is a subset of u.
bool contains(const Subspace& u, const Subspace& w);

/// A complement s of w inside u (u = s + w, s and w meet in 0).
///
/// Basis rows of u are scanned in canonical order and a row is kept when it
/// is independent of w plus the rows already kept. Throws NotContained if w
/// is not a subspace of u.
Subspace complement_within(const Subspace& w, const Subspace& u);
/// Same greedy rule, scanning the given spanning rows of u instead of its
/// canonical basis. Different spanning sets give different complements.
Subspace complement_within(const Subspace& w, const Subspace& u, const Matrix& spanning_rows);

/// dim(sum) == sum of dims.
bool is_direct_sum(std::span<const Subspace> parts);
/// dim u - dim w for w inside u; throws NotContained otherwise.
std::size_t quotient_dim(const Subspace& u, const Subspace& w);

}  // namespace interdec
