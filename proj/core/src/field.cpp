#include "hochglue/field.hpp"

#include "hochglue/errors.hpp"

namespace hochglue {

Field Field::prime(std::uint32_t p) {
  if (p < 2) throw Error("field characteristic must be prime, got " + std::to_string(p));
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error("field characteristic must be prime, got " + std::to_string(p));
  }
  return Field(p);
}

Scalar Field::reduce_int(long v) const {
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return Scalar(m);
}

Scalar Field::from_int(long v) const {
  if (is_rational()) return Scalar(v);
  return reduce_int(v);
}

Scalar Field::normalize(const Scalar& v) const {
  if (is_rational()) {
    Scalar r = v;
    r.canonicalize();
    return r;
  }
  mpz_class num = v.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw Error("denominator divisible by the characteristic");
  mpz_class inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(mpz_class((num * inv_den) % p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a + b;
  return reduce_int(a.get_num().get_si() + b.get_num().get_si());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a - b;
  return reduce_int(a.get_num().get_si() - b.get_num().get_si());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (is_rational()) return a * b;
  return reduce_int(a.get_num().get_si() * b.get_num().get_si());
}

Scalar Field::neg(const Scalar& a) const {
  if (is_rational()) return -a;
  return reduce_int(-a.get_num().get_si());
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error("division by zero");
  if (is_rational()) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(r);
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace hochglue
