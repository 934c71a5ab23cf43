#pragma once

#include <gmpxx.h>

#include <string>

namespace interdec {

// Field elements are GMP rationals. Over GF(p) only canonical residues
// 0 <= x < p (denominator 1) are ever produced by Field arithmetic.
using Scalar = mpq_class;

/// An exact field: either Q or GF(p) for a prime p.
///
/// Field is a small value type. Two fields compare equal when they are the
/// same kind and, for GF(p), share the modulus. Every arithmetic helper
/// returns a canonical representative so that equal values are equal as
/// GMP numbers.
class Field {
 public:
  enum class Kind { Rational, Modular };

  static Field rational() { return Field(Kind::Rational, 0); }
  /// Throws Error(InvalidField) unless p is prime.
  static Field modular(const mpz_class& p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  const mpz_class& modulus() const noexcept { return modulus_; }

  /// "rational" or "mod:p"
  std::string name() const;

  /// Maps an arbitrary rational into the field. Over GF(p) the denominator
  /// must be invertible, otherwise Error(InvalidField) is thrown.
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_int(long v) const { return from_rational(mpq_class(v)); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Multiplicative inverse; a must be nonzero.
  Scalar inv(const Scalar& a) const;
  /// a -= factor * b, the elimination kernel.
  void sub_mul(Scalar& a, const Scalar& factor, const Scalar& b) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  friend bool operator==(const Field& x, const Field& y) {
    return x.kind_ == y.kind_ && x.modulus_ == y.modulus_;
  }

 private:
  Field(Kind kind, const mpz_class& modulus) : kind_(kind), modulus_(modulus) {}

  void reduce(Scalar& a) const;

  Kind kind_;
  mpz_class modulus_;
};

}  // namespace interdec
