#include "interdec/field.hpp"

#include "interdec/error.hpp"

namespace interdec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::NotMonotoneMap: return "NotMonotoneMap";
    case ErrorCode::VectorOutsideArrangement: return "VectorOutsideArrangement";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::EmptyVariableDomain: return "EmptyVariableDomain";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::Uncertified: return "Uncertified";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Field Field::modular(const mpz_class& p) {
  // 50 Miller-Rabin rounds; GMP is deterministic below 2^64 anyway.
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 50) == 0) {
    throw Error(ErrorCode::InvalidField, "modulus " + p.get_str() + " is not prime");
  }
  return Field(Kind::Modular, p);
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "mod:" + modulus_.get_str();
}

void Field::reduce(Scalar& a) const {
  if (is_rational()) {
    a.canonicalize();
    return;
  }
  mpz_class num = a.get_num() % modulus_;
  if (num < 0) num += modulus_;
  a = num;
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) {
    Scalar r(q);
    r.canonicalize();
    return r;
  }
  mpz_class den = q.get_den() % modulus_;
  if (den == 0) {
    throw Error(ErrorCode::InvalidField,
                "denominator " + q.get_den().get_str() + " is not invertible modulo " + modulus_.get_str());
  }
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t());
  mpz_class num = (q.get_num() * den_inv) % modulus_;
  if (num < 0) num += modulus_;
  return Scalar(num);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a + b;
  if (!is_rational() && r >= modulus_) r -= modulus_;
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a - b;
  if (!is_rational() && r < 0) r += modulus_;
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  Scalar r = a * b;
  if (!is_rational()) reduce(r);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational() || is_zero(a)) return -a;
  return Scalar(modulus_) - a;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_rational()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), modulus_.get_mpz_t());
  return Scalar(r);
}

void Field::sub_mul(Scalar& a, const Scalar& factor, const Scalar& b) const {
  if (is_rational()) {
    a -= factor * b;
    return;
  }
  a -= factor * b;
  reduce(a);
}

}  // namespace interdec
