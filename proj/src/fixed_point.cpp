#include "quadzeta/fixed_point.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace quadzeta {

FixedPoint FixedPoint::from_quad(const QuadElem& u, unsigned bits) {
  return {floor_scaled(u, bits), bits};
}

FixedPoint FixedPoint::from_rational(const Rational& r, unsigned bits) {
  Integer num = r.get_num() << bits;
  return {floor_div(num, r.get_den()), bits};
}

FixedPoint FixedPoint::rescaled(unsigned bits) const {
  Integer m;
  if (bits >= scale_bits_) {
    m = mantissa_ << (bits - scale_bits_);
  } else {
    mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), scale_bits_ - bits);
  }
  return {m, bits};
}

double FixedPoint::to_double() const {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(scale_bits_));
}

std::string FixedPoint::to_decimal(unsigned significant_digits) const {
  if (mantissa_ == 0) return "0";
  mpf_class f(0, static_cast<mp_bitcnt_t>(mpz_sizeinbase(mantissa_.get_mpz_t(), 2) + 64));
  mpf_set_z(f.get_mpf_t(), mantissa_.get_mpz_t());
  mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), scale_bits_);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, significant_digits);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  while (digits.size() < significant_digits) digits.push_back('0');
  // value = 0.digits * 10^exp
  if (exp > 40 || exp < -40) {
    std::string out = sign + digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    return out + "e" + std::to_string(exp - 1);
  }
  if (exp <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
  const auto e = static_cast<std::size_t>(exp);
  if (e >= digits.size()) return sign + digits + std::string(e - digits.size(), '0');
  return sign + digits.substr(0, e) + "." + digits.substr(e);
}

FixedPoint operator+(const FixedPoint& a, const FixedPoint& b) {
  if (a.scale_bits_ != b.scale_bits_) return a + b.rescaled(a.scale_bits_);
  return {a.mantissa_ + b.mantissa_, a.scale_bits_};
}

FixedPoint operator-(const FixedPoint& a, const FixedPoint& b) { return a + (-b); }

FixedPoint operator*(const FixedPoint& a, const FixedPoint& b) {
  Integer m = a.mantissa_ * b.mantissa_;
  mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), b.scale_bits_);
  return {m, a.scale_bits_};
}

namespace {

// sum_i (-1)^i / ((2i+1) m^{2i+1}), scaled by 2^bits.
Integer arctan_inverse(unsigned long m, unsigned bits) {
  const Integer m2 = Integer(m) * m;
  Integer power = pow2(bits) / m;
  Integer sum = power;
  for (unsigned long i = 1; power != 0; ++i) {
    power /= m2;
    const Integer term = power / (2 * i + 1);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

}  // namespace

FixedPoint pi_fixed(unsigned bits) {
  static std::mutex mutex;
  static std::map<unsigned, Integer> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(bits);
  if (it == cache.end()) {
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239), with 32 guard bits.
    const unsigned work = bits + 32;
    Integer pi = 16 * arctan_inverse(5, work) - 4 * arctan_inverse(239, work);
    pi >>= 32;
    it = cache.emplace(bits, pi).first;
  }
  return {it->second, bits};
}

CosSin cos_sin_pi(const Integer& t_mantissa, unsigned bits) {
  if (bits < 4) throw std::invalid_argument("cos_sin_pi needs at least 4 bits");
  const Integer half = pow2(bits - 1);
  const Integer quarter = pow2(bits - 2);
  const Integer one = pow2(bits);

  Integer r = t_mantissa;
  mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits + 1);  // t mod 2
  Integer quadrant_z;
  mpz_fdiv_q_2exp(quadrant_z.get_mpz_t(), r.get_mpz_t(), bits - 1);
  const unsigned long quadrant = mpz_get_ui(quadrant_z.get_mpz_t());
  r -= quadrant_z * half;  // r in [0, 1/2)
  const bool complement = r > quarter;
  if (complement) r = half - r;  // r in [0, 1/4]

  // x = pi r in [0, pi/4]
  Integer x = pi_fixed(bits).mantissa() * r;
  x >>= bits;
  Integer x2 = x * x;
  x2 >>= bits;

  Integer s = x;
  Integer term = x;
  for (unsigned long i = 1; term != 0; ++i) {
    term *= x2;
    term >>= bits;
    term /= (2 * i) * (2 * i + 1);
    if (i % 2 == 1) {
      s -= term;
    } else {
      s += term;
    }
  }
  Integer c = one;
  term = one;
  for (unsigned long i = 1; term != 0; ++i) {
    term *= x2;
    term >>= bits;
    term /= (2 * i - 1) * (2 * i);
    if (i % 2 == 1) {
      c -= term;
    } else {
      c += term;
    }
  }
  if (complement) std::swap(c, s);
  switch (quadrant) {
    case 0:
      return {c, s};
    case 1:
      return {-s, c};
    case 2:
      return {-c, -s};
    default:
      return {s, -c};
  }
}

}  // namespace quadzeta
