#include "quadzeta/quad_field.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <ostream>

#include "quadzeta/errors.hpp"

namespace quadzeta {

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n <= 0) throw DomainError("squarefree_split of a non-positive integer");
  Integer rest = n;
  Integer root = 1;
  Integer free = 1;
  // Trial division up to the cube root is enough: what remains afterwards is
  // 1, a prime, a prime square, or a product of two distinct primes.
  for (Integer p = 2; p * p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    root *= ipow(p, e / 2);
    if (e % 2 == 1) free *= p;
  }
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      root *= isqrt(rest);
    } else {
      free *= rest;
    }
  }
  return {root, free};
}

QuadElem::QuadElem(Rational x, Rational y, const Integer& radicand)
    : x_(std::move(x)), y_(std::move(y)) {
  const SquarefreeSplit split = squarefree_split(radicand);
  if (split.free < 2)
    throw DomainError("radicand " + radicand.get_str() +
                      " is a perfect square; no quadratic field");
  d_ = split.free;
  y_ *= Rational(split.square_root);
}

QuadElem QuadElem::rational(Rational r, const Integer& D) {
  return QuadElem(std::move(r), Rational(0), D);
}

QuadElem QuadElem::sqrt_of(const Integer& D) {
  return QuadElem(Rational(0), Rational(1), D);
}

void QuadElem::require_same_field(const QuadElem& o) const {
  if (d_ != o.d_)
    throw MixedFieldError("mixed-field operation: sqrt(" + d_.get_str() + ") vs sqrt(" +
                          o.d_.get_str() + ")");
}

QuadElem QuadElem::conj() const { return QuadElem(x_, -y_, d_, nullptr); }

Rational QuadElem::norm() const {
  Rational n = x_ * x_ - Rational(d_) * y_ * y_;
  return n;
}

Rational QuadElem::trace() const {
  Rational t = 2 * x_;
  return t;
}

QuadElem QuadElem::inverse() const {
  const Rational n = norm();
  if (n == 0) throw DomainError("division by zero in Q(sqrt " + d_.get_str() + ")");
  return QuadElem(x_ / n, -y_ / n, d_, nullptr);
}

QuadElem QuadElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadElem result(Rational(1), Rational(0), d_, nullptr);
  QuadElem base = *this;
  auto n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

QuadElem QuadElem::operator-() const { return QuadElem(-x_, -y_, d_, nullptr); }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(o);
  Rational nx = x_ * o.x_ + Rational(d_) * y_ * o.y_;
  Rational ny = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

QuadElem& QuadElem::operator+=(const Rational& r) {
  x_ += r;
  return *this;
}

QuadElem& QuadElem::operator-=(const Rational& r) {
  x_ -= r;
  return *this;
}

QuadElem& QuadElem::operator*=(const Rational& r) {
  x_ *= r;
  y_ *= r;
  return *this;
}

QuadElem& QuadElem::operator/=(const Rational& r) {
  if (r == 0) throw DomainError("division by zero");
  x_ /= r;
  y_ /= r;
  return *this;
}

QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }
QuadElem operator+(QuadElem a, const Rational& r) { return a += r; }
QuadElem operator-(QuadElem a, const Rational& r) { return a -= r; }
QuadElem operator*(QuadElem a, const Rational& r) { return a *= r; }
QuadElem operator/(QuadElem a, const Rational& r) { return a /= r; }
QuadElem operator+(const Rational& r, QuadElem a) { return a += r; }
QuadElem operator-(const Rational& r, const QuadElem& a) { return -a + r; }
QuadElem operator*(const Rational& r, QuadElem a) { return a *= r; }
QuadElem operator/(const Rational& r, const QuadElem& a) { return a.inverse() * r; }

int sign(const QuadElem& u) {
  const int sx = sgn(u.x());
  const int sy = sgn(u.y());
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the larger of x^2 and D*y^2 wins. They are never equal
  // because D is not a square.
  const Rational x2 = u.x() * u.x();
  const Rational dy2 = Rational(u.radicand()) * u.y() * u.y();
  return x2 > dy2 ? sx : sy;
}

std::strong_ordering compare(const QuadElem& a, const QuadElem& b) {
  const int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// floor((a + b*sqrt(D)) / c) for c > 0.
Integer floor_surd(const Integer& a, const Integer& b, const Integer& D, const Integer& c) {
  if (b == 0) return floor_div(a, c);
  const Integer s = isqrt(b * b * D);
  // |b| sqrt(D) lies strictly between s and s + 1.
  if (b > 0) return floor_div(a + s, c);
  return floor_div(a - s - 1, c);
}

}  // namespace

Integer floor(const QuadElem& u) { return floor_scaled(u, 0); }

Integer floor_scaled(const QuadElem& u, unsigned bits) {
  Integer c = lcm(u.x().get_den(), u.y().get_den());
  Integer a = u.x().get_num() * (c / u.x().get_den());
  Integer b = u.y().get_num() * (c / u.y().get_den());
  if (bits > 0) {
    const Integer scale = pow2(bits);
    a *= scale;
    b *= scale;
  }
  return floor_surd(a, b, u.radicand(), c);
}

SignFloor sign_floor(const QuadElem& u) { return {sign(u), floor(u)}; }

double to_double(const QuadElem& u) {
  if (u.is_zero()) return 0.0;
  // Increase the scale until the truncation carries at least 64 significant
  // bits, so cancellation between x and y*sqrt(D) cannot bite.
  for (unsigned bits = 64;; bits += 64) {
    const Integer m = floor_scaled(u, bits);
    if (mpz_sizeinbase(m.get_mpz_t(), 2) >= 64 || bits > 1U << 16) {
      long exp = 0;
      const double mant = mpz_get_d_2exp(&exp, m.get_mpz_t());
      return std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(bits));
    }
  }
}

std::string to_string(const QuadElem& u) {
  return u.x().get_str() + " + " + u.y().get_str() + "*sqrt(" + u.radicand().get_str() + ")";
}

std::string to_pretty_string(const QuadElem& u) {
  if (u.y() == 0) return u.x().get_str();
  const std::string root = "sqrt(" + u.radicand().get_str() + ")";
  const Rational ay = abs(u.y());
  std::string ypart = ay == 1 ? root : ay.get_str() + "*" + root;
  if (u.x() == 0) return (u.y() < 0 ? "-" : "") + ypart;
  return u.x().get_str() + (u.y() < 0 ? " - " : " + ") + ypart;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& u) { return os << to_string(u); }

namespace {

// Parse-time value: a field element whose radicand may still be undetermined
// (d == 0) while only rational literals have been seen.
struct ParsedValue {
  Rational x = 0;
  Rational y = 0;
  Integer d = 0;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ParsedValue parse() {
    ParsedValue v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Integer join_field(const ParsedValue& a, const ParsedValue& b) {
    if (a.d != 0 && b.d != 0 && a.d != b.d)
      throw MixedFieldError("expression mixes sqrt(" + a.d.get_str() + ") and sqrt(" +
                            b.d.get_str() + ")");
    return a.d != 0 ? a.d : b.d;
  }

  static ParsedValue add(const ParsedValue& a, const ParsedValue& b, int s) {
    return {a.x + s * b.x, a.y + s * b.y, join_field(a, b)};
  }

  static ParsedValue mul(const ParsedValue& a, const ParsedValue& b) {
    const Integer d = join_field(a, b);
    return {a.x * b.x + Rational(d) * a.y * b.y, a.x * b.y + a.y * b.x, d};
  }

  ParsedValue div(const ParsedValue& a, const ParsedValue& b) {
    const Rational n = b.x * b.x - Rational(b.d) * b.y * b.y;
    if (n == 0) fail("division by zero");
    return mul(a, {b.x / n, -b.y / n, b.d});
  }

  ParsedValue expression() {
    ParsedValue v = term();
    for (;;) {
      if (accept('+')) {
        v = add(v, term(), 1);
      } else if (accept('-')) {
        v = add(v, term(), -1);
      } else {
        return v;
      }
    }
  }

  ParsedValue term() {
    ParsedValue v = unary();
    for (;;) {
      if (accept('*')) {
        v = mul(v, unary());
      } else if (accept('/')) {
        v = div(v, unary());
      } else {
        return v;
      }
    }
  }

  ParsedValue unary() {
    if (accept('-')) {
      ParsedValue v = unary();
      return {-v.x, -v.y, v.d};
    }
    if (accept('+')) return unary();
    return primary();
  }

  std::optional<Integer> integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  ParsedValue primary() {
    if (accept('(')) {
      ParsedValue v = expression();
      expect(')');
      return v;
    }
    skip_space();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const auto n = integer_literal();
      if (!n) fail("sqrt expects a non-negative integer literal");
      expect(')');
      if (*n == 0) return {};
      const SquarefreeSplit split = squarefree_split(*n);
      if (split.free == 1) return {Rational(split.square_root), 0, 0};
      return {0, Rational(split.square_root), split.free};
    }
    const auto n = integer_literal();
    if (!n) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                                     : "unexpected end of input");
    return {Rational(*n), 0, 0};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadElem parse_quad(std::string_view expr) { return parse_quad(expr, Integer(0)); }

QuadElem parse_quad(std::string_view expr, const Integer& default_radicand) {
  const ParsedValue v = ExprParser(expr).parse();
  if (v.d != 0) return QuadElem(v.x, v.y, v.d);
  if (default_radicand != 0) return QuadElem::rational(v.x, default_radicand);
  throw DomainError("'" + std::string(expr) +
                    "' is rational; a real quadratic irrationality is required");
}

}  // namespace quadzeta
