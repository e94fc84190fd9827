#pragma once

// Binary fixed-point reals mantissa / 2^scale_bits over GMP integers, with
// pi and sin/cos(pi t) evaluated by argument reduction and Taylor series.

#include <string>

#include "quadzeta/quad_field.hpp"
#include "quadzeta/rational.hpp"

namespace quadzeta {

class FixedPoint {
 public:
  FixedPoint() = default;
  FixedPoint(Integer mantissa, unsigned scale_bits)
      : mantissa_(std::move(mantissa)), scale_bits_(scale_bits) {}

  /// floor(u * 2^bits) / 2^bits, exact truncation.
  static FixedPoint from_quad(const QuadElem& u, unsigned bits);
  static FixedPoint from_rational(const Rational& r, unsigned bits);

  const Integer& mantissa() const { return mantissa_; }
  unsigned scale_bits() const { return scale_bits_; }

  /// Same value at another scale, rounding toward -infinity when narrowing.
  FixedPoint rescaled(unsigned bits) const;
  int sign() const { return sgn(mantissa_); }
  FixedPoint abs() const { return {::abs(mantissa_), scale_bits_}; }
  double to_double() const;
  /// Decimal rendering with the given number of significant digits,
  /// positional notation for moderate magnitudes.
  std::string to_decimal(unsigned significant_digits = 30) const;

  FixedPoint operator-() const { return {-mantissa_, scale_bits_}; }
  friend FixedPoint operator+(const FixedPoint& a, const FixedPoint& b);
  friend FixedPoint operator-(const FixedPoint& a, const FixedPoint& b);
  /// Product at the scale of the left operand, truncated.
  friend FixedPoint operator*(const FixedPoint& a, const FixedPoint& b);
  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;

 private:
  Integer mantissa_ = 0;
  unsigned scale_bits_ = 0;
};

/// pi truncated to `bits` fractional bits (error < 2^-bits).
FixedPoint pi_fixed(unsigned bits);

/// cos(pi t) and sin(pi t) as mantissas at scale `bits`, for
/// t = t_mantissa / 2^bits in [0, 2). Absolute error below 2^(7-bits).
struct CosSin {
  Integer cos;
  Integer sin;
};

CosSin cos_sin_pi(const Integer& t_mantissa, unsigned bits);

}  // namespace quadzeta
