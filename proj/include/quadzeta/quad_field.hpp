#pragma once

// Exact arithmetic in real quadratic fields Q(sqrt D).
//
// A QuadElem is x + y*sqrt(D) with rational x, y and squarefree D >= 2. The
// real embedding is fixed by sqrt(D) > 0; the Galois conjugate is the element
// x - y*sqrt(D), never a second embedding. Representations are canonical, so
// == is structural equality.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "quadzeta/rational.hpp"

namespace quadzeta {

/// n = square * free with free squarefree (free == 1 for perfect squares).
struct SquarefreeSplit {
  Integer square_root;  // s with n = s^2 * free
  Integer free;
};

SquarefreeSplit squarefree_split(const Integer& n);

class QuadElem {
 public:
  /// x + y*sqrt(radicand). Square factors of the radicand are folded into y.
  /// Throws DomainError unless the radicand's squarefree part is >= 2.
  QuadElem(Rational x, Rational y, const Integer& radicand);

  /// The rational r embedded in Q(sqrt D).
  static QuadElem rational(Rational r, const Integer& D);
  /// sqrt(D) itself.
  static QuadElem sqrt_of(const Integer& D);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QuadElem conj() const;
  Rational norm() const;
  Rational trace() const;
  QuadElem inverse() const;
  /// Negative exponents go through inverse().
  QuadElem pow(long e) const;

  QuadElem operator-() const;
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem& operator+=(const Rational& r);
  QuadElem& operator-=(const Rational& r);
  QuadElem& operator*=(const Rational& r);
  QuadElem& operator/=(const Rational& r);

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

 private:
  QuadElem(Rational x, Rational y, Integer d, std::nullptr_t)
      : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {}
  void require_same_field(const QuadElem& o) const;

  Rational x_;
  Rational y_;
  Integer d_;
};

QuadElem operator+(QuadElem a, const QuadElem& b);
QuadElem operator-(QuadElem a, const QuadElem& b);
QuadElem operator*(QuadElem a, const QuadElem& b);
QuadElem operator/(QuadElem a, const QuadElem& b);
QuadElem operator+(QuadElem a, const Rational& r);
QuadElem operator-(QuadElem a, const Rational& r);
QuadElem operator*(QuadElem a, const Rational& r);
QuadElem operator/(QuadElem a, const Rational& r);
QuadElem operator+(const Rational& r, QuadElem a);
QuadElem operator-(const Rational& r, const QuadElem& a);
QuadElem operator*(const Rational& r, QuadElem a);
QuadElem operator/(const Rational& r, const QuadElem& a);

/// Exact sign in the fixed real embedding: -1, 0 or +1.
int sign(const QuadElem& u);

/// Exact order comparison in the real embedding (same field).
std::strong_ordering compare(const QuadElem& a, const QuadElem& b);

/// floor(u) without floating point.
Integer floor(const QuadElem& u);

/// floor(u * 2^bits), the exact fixed-point truncation of u.
Integer floor_scaled(const QuadElem& u, unsigned bits);

struct SignFloor {
  int sign;
  Integer floor;
};

SignFloor sign_floor(const QuadElem& u);

double to_double(const QuadElem& u);

/// Canonical display form "x + y*sqrt(D)" (e.g. "-1/3 + 0*sqrt(2)",
/// "1/2 + -1/2*sqrt(5)"); parse_quad() reads it back to an equal element.
std::string to_string(const QuadElem& u);

/// Shortest readable form: "-1/3", "sqrt(2)", "1/2 - 3/4*sqrt(5)".
std::string to_pretty_string(const QuadElem& u);

std::ostream& operator<<(std::ostream& os, const QuadElem& u);

/// Parses sums, differences, products and quotients of integer literals,
/// rational literals and sqrt(INT), with parentheses and unary minus. All
/// square roots must share one squarefree part. Covers "sqrt(2)",
/// "(1+sqrt(5))/2", "2*sqrt(2)" and the canonical display form.
///
/// Throws ParseError on malformed input and DomainError when no irrational
/// square root occurs (e.g. "sqrt(4)" or "3"), since no field is determined.
QuadElem parse_quad(std::string_view expr);

/// As parse_quad, but a purely rational expression is embedded in Q(sqrt D).
QuadElem parse_quad(std::string_view expr, const Integer& default_radicand);

}  // namespace quadzeta
