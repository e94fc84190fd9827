#include "quadzeta/rational.hpp"

#include <limits>

#include "quadzeta/errors.hpp"

namespace quadzeta {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

Rational frac(const Rational& x) {
  Rational r = x - Rational(floor(x));
  return r;
}

Rational frac_angle(const Rational& x) {
  Rational r = frac(x);
  if (r == 0) r = 1;
  return r;
}

FracParts frac_parts(const Rational& x) {
  return {frac(x), frac_angle(x)};
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("square root of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer pow2(unsigned e) {
  Integer r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return rpow(make_rational(base.get_den(), base.get_num()), -e);
  }
  const auto ue = static_cast<unsigned long>(e);
  return make_rational(ipow(base.get_num(), ue), ipow(base.get_den(), ue));
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw ParseError("not a rational literal: '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

bool fits_int64(const Integer& z) {
  return z >= std::numeric_limits<std::int64_t>::min() &&
         z <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw ResourceError("integer does not fit in 64 bits");
  // mpz_get_si is only guaranteed for long; long is 64-bit on the targets we
  // build for.
  static_assert(sizeof(long) == 8);
  return mpz_get_si(z.get_mpz_t());
}

}  // namespace quadzeta
