#include "interdec/subspace.hpp"

#include <numeric>

#include "interdec/error.hpp"

namespace interdec {

namespace {

void require_compatible(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces of F^" + std::to_string(u.ambient_dim()) + " and F^" +
                                                  std::to_string(w.ambient_dim()));
  }
  if (!(u.field() == w.field())) {
    throw Error(ErrorCode::FieldMismatch, "subspaces over " + u.field().name() + " and " + w.field().name());
  }
}

}  // namespace

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  std::iota(pivots.begin(), pivots.end(), std::size_t{0});
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::from_generators(const Field& field, std::size_t ambient_dim, const Matrix& generators) {
  if (generators.cols() != ambient_dim) {
    throw Error(ErrorCode::DimensionMismatch, "generators have " + std::to_string(generators.cols()) +
                                                  " columns, ambient dimension is " + std::to_string(ambient_dim));
  }
  if (!(generators.field() == field)) {
    throw Error(ErrorCode::FieldMismatch, "generators over " + generators.field().name() + ", expected " + field.name());
  }
  EchelonForm ef = echelonize(generators);
  ef.reduced.truncate_rows(ef.pivots.size());
  return Subspace(std::move(ef.reduced), std::move(ef.pivots));
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return from_generators(field, ambient_dim, Matrix::from_rows(field, ambient_dim, generators));
}

Vector Subspace::residual(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match ambient dimension");
  const Field& f = field();
  Vector r(v.begin(), v.end());
  // RREF rows are zero at every other pivot, so one pass suffices.
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar factor = r[pivots_[i]];
    if (Field::is_zero(factor)) continue;
    for (std::size_t c = 0; c < r.size(); ++c) f.sub_mul(r[c], factor, basis_(i, c));
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero_vector(residual(v)); }

Subspace sum(const Subspace& u, const Subspace& w) {
  require_compatible(u, w);
  if (w.is_zero()) return u;
  if (u.is_zero()) return w;
  return Subspace::from_generators(u.field(), u.ambient_dim(), u.basis().stacked(w.basis()));
}

Subspace sum(std::span<const Subspace> parts, const Field& field, std::size_t ambient_dim) {
  Matrix gens(field, 0, ambient_dim);
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient_dim) throw Error(ErrorCode::DimensionMismatch, "summand in the wrong ambient space");
    if (!(p.field() == field)) throw Error(ErrorCode::FieldMismatch, "summand over a different field");
    if (!p.is_zero()) gens = gens.stacked(p.basis());
  }
  return Subspace::from_generators(field, ambient_dim, gens);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  require_compatible(u, w);
  const Field& f = u.field();
  const std::size_t d = u.ambient_dim();
  if (u.is_zero() || w.is_zero()) return Subspace::zero(f, d);

  // Zassenhaus: rows (u | u) and (w | 0). After elimination the rows whose
  // left half vanishes carry a basis of the intersection on the right.
  Matrix block(f, u.dim() + w.dim(), 2 * d);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      block(r, c) = u.basis()(r, c);
      block(r, d + c) = u.basis()(r, c);
    }
  }
  for (std::size_t r = 0; r < w.dim(); ++r) {
    for (std::size_t c = 0; c < d; ++c) block(u.dim() + r, c) = w.basis()(r, c);
  }
  EchelonForm ef = echelonize(std::move(block));

  Matrix gens(f, 0, d);
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    if (ef.pivots[i] < d) continue;
    gens.append_row(ef.reduced.row(i).subspan(d, d));
  }
  return Subspace::from_generators(f, d, gens);
}

bool contains(const Subspace& u, const Subspace& w) {
  require_compatible(u, w);
  if (w.dim() > u.dim()) return false;
  for (std::size_t r = 0; r < w.dim(); ++r) {
    if (!u.contains(w.basis().row(r))) return false;
  }
  return true;
}

Subspace complement_within(const Subspace& w, const Subspace& u) { return complement_within(w, u, u.basis()); }

Subspace complement_within(const Subspace& w, const Subspace& u, const Matrix& spanning_rows) {
  require_compatible(u, w);
  if (!contains(u, w)) throw Error(ErrorCode::NotContained, "complement requested for a subspace not contained in its host");
  const Field& f = u.field();
  const std::size_t d = u.ambient_dim();

  EchelonBuilder seen(f, d);
  for (std::size_t r = 0; r < w.dim(); ++r) seen.insert(w.basis().row(r));

  Matrix kept(f, 0, d);
  for (std::size_t r = 0; r < spanning_rows.rows(); ++r) {
    auto row = spanning_rows.row(r);
    if (!u.contains(row)) throw Error(ErrorCode::NotContained, "spanning row lies outside the host subspace");
    if (seen.insert(row)) kept.append_row(row);
  }
  Subspace s = Subspace::from_generators(f, d, kept);
  if (s.dim() + w.dim() != u.dim()) {
    throw Error(ErrorCode::NotContained, "spanning rows do not span the host subspace");
  }
  return s;
}

bool is_direct_sum(std::span<const Subspace> parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  for (const auto& p : parts) {
    require_compatible(parts.front(), p);
    total += p.dim();
  }
  if (total > parts.front().ambient_dim()) return false;
  return sum(parts, parts.front().field(), parts.front().ambient_dim()).dim() == total;
}

std::size_t quotient_dim(const Subspace& u, const Subspace& w) {
  if (!contains(u, w)) throw Error(ErrorCode::NotContained, "quotient by a subspace that is not contained");
  return u.dim() - w.dim();
}

}  // namespace interdec
