#include "quadzeta/modular.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "quadzeta/errors.hpp"

namespace quadzeta {

Mat2Z operator*(const Mat2Z& l, const Mat2Z& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
          l.c * r.b + l.d * r.d};
}

Mat2Z operator-(const Mat2Z& m) { return {-m.a, -m.b, -m.c, -m.d}; }

Mat2Z Mat2Z::inverse() const {
  const Integer dt = det();
  if (dt == 1) return {d, -b, -c, a};
  if (dt == -1) return {-d, b, c, -a};
  throw DomainError("matrix " + to_string(*this) + " is not invertible over Z");
}

Mat2Z Mat2Z::mod(const Integer& n) const {
  auto r = [&n](const Integer& v) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return m;
  };
  return {r(a), r(b), r(c), r(d)};
}

Mat2Z Mat2Z::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Mat2Z result;
  Mat2Z base = *this;
  auto n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool Mat2Z::is_identity_mod(const Integer& n) const {
  const Mat2Z r = mod(n);
  return r == Mat2Z::identity().mod(n);
}

std::string to_string(const Mat2Z& m) {
  return "(" + m.a.get_str() + " " + m.b.get_str() + "; " + m.c.get_str() + " " +
         m.d.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Mat2Z& m) { return os << to_string(m); }

QuadElem mobius(const Mat2Z& m, const QuadElem& alpha) {
  const QuadElem num = alpha * Rational(m.a) + Rational(m.b);
  const QuadElem den = alpha * Rational(m.c) + Rational(m.d);
  return num / den;
}

Mat2Z letter_matrix(Letter l) {
  switch (l) {
    case Letter::A:
      return {1, 2, 0, 1};
    case Letter::A_inv:
      return {1, -2, 0, 1};
    case Letter::B:
      return {1, 0, 2, 1};
    case Letter::B_inv:
      return {1, 0, -2, 1};
  }
  throw std::logic_error("bad letter");
}

Letter inverse(Letter l) {
  switch (l) {
    case Letter::A:
      return Letter::A_inv;
    case Letter::A_inv:
      return Letter::A;
    case Letter::B:
      return Letter::B_inv;
    case Letter::B_inv:
      return Letter::B;
  }
  throw std::logic_error("bad letter");
}

char letter_char(Letter l) {
  switch (l) {
    case Letter::A:
      return 'A';
    case Letter::A_inv:
      return 'a';
    case Letter::B:
      return 'B';
    case Letter::B_inv:
      return 'b';
  }
  throw std::logic_error("bad letter");
}

Mat2Z word_product(const std::vector<Letter>& letters) {
  Mat2Z m;
  for (Letter l : letters) m = m * letter_matrix(l);
  return m;
}

std::string to_string(const Gamma2Word& w) {
  std::ostringstream os;
  if (w.letters.empty()) os << "1";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) os << '.';
    switch (w.letters[i]) {
      case Letter::A:
        os << "A";
        break;
      case Letter::A_inv:
        os << "A^-1";
        break;
      case Letter::B:
        os << "B";
        break;
      case Letter::B_inv:
        os << "B^-1";
        break;
    }
  }
  os << " (sign " << (w.sign > 0 ? "+1" : "-1") << ")";
  return os.str();
}

namespace {

void require_irrational(const QuadElem& alpha) {
  if (alpha.is_rational())
    throw DomainError("alpha = " + to_pretty_string(alpha) +
                      " is rational; a quadratic irrationality is required");
}

}  // namespace

MinimalPolynomial minimal_polynomial(const QuadElem& alpha) {
  require_irrational(alpha);
  // (t - alpha)(t - alpha') = t^2 - tr t + N, cleared of denominators.
  const Rational tr = alpha.trace();
  const Rational nm = alpha.norm();
  const Integer scale = lcm(tr.get_den(), nm.get_den());
  Integer a = scale;
  Integer b = -tr.get_num() * (scale / tr.get_den());
  Integer c = nm.get_num() * (scale / nm.get_den());
  const Integer g = gcd(gcd(a, b), c);
  return {a / g, b / g, c / g};
}

OrderData lattice_order(const QuadElem& alpha) {
  const MinimalPolynomial mp = minimal_polynomial(alpha);
  const Integer disc = mp.discriminant();

  // alpha = (P + sqrt(disc)) / Q with Q | disc - P^2.
  Integer P = alpha.y() > 0 ? Integer(-mp.b) : mp.b;
  Integer Q = alpha.y() > 0 ? Integer(2 * mp.a) : Integer(-2 * mp.a);
  const Integer root = isqrt(disc);
  // sqrt(disc) = 2 a |y| sqrt(D) as a field element.
  const QuadElem sqrt_disc(Rational(0), 2 * Rational(mp.a) * abs(alpha.y()), alpha.radicand());

  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> quotients;
  std::vector<std::pair<Integer, Integer>> states;
  constexpr std::size_t kMaxSteps = 10'000'000;
  for (std::size_t i = 0;; ++i) {
    if (i > kMaxSteps) throw ResourceError("continued fraction period not found");
    auto [it, inserted] = seen.emplace(std::make_pair(P, Q), i);
    if (!inserted) {
      const std::size_t start = it->second;
      Mat2Z period;
      for (std::size_t t = start; t < i; ++t) period = period * Mat2Z{quotients[t], 1, 1, 0};
      const QuadElem xi = (sqrt_disc + Rational(states[start].first)) / Rational(states[start].second);
      QuadElem eps = xi * Rational(period.c) + Rational(period.d);
      if (sign(eps - Rational(1)) <= 0) throw std::logic_error("period unit is not > 1");
      // Membership in the order of Z + Z*alpha is checked by j_matrix.
      (void)j_matrix(eps, alpha);
      QuadElem gamma = eps.norm() == 1 ? eps : eps * eps;
      return {alpha, disc, std::move(eps), std::move(gamma)};
    }
    states.emplace_back(P, Q);
    // a_i = floor((P + sqrt(disc)) / Q), with sqrt(disc) in (root, root + 1).
    const Integer ai = Q > 0 ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
    quotients.push_back(ai);
    P = ai * Q - P;
    Q = (disc - P * P) / Q;
  }
}

Mat2Z j_matrix(const QuadElem& u, const QuadElem& alpha) {
  require_irrational(alpha);
  const QuadElem ua = u * alpha;
  const Rational a = ua.y() / alpha.y();
  const Rational b = ua.x() - a * alpha.x();
  const Rational c = u.y() / alpha.y();
  const Rational d = u.x() - c * alpha.x();
  if (!is_integer(a) || !is_integer(b) || !is_integer(c) || !is_integer(d))
    throw DomainError(to_pretty_string(u) + " is not in the order of Z + Z*(" +
                      to_pretty_string(alpha) + ")");
  return {a.get_num(), b.get_num(), c.get_num(), d.get_num()};
}

TransferData find_transfer_matrix(const QuadElem& alpha, const Rational& p, const Rational& q,
                                  unsigned power_multiple) {
  require_irrational(alpha);
  if (is_integer(p)) throw DomainError("transfer matrix requires p not in Z, got " + to_string(p));
  if (power_multiple == 0) throw DomainError("power multiple must be positive");

  const OrderData order = lattice_order(alpha);
  const Mat2Z g = j_matrix(order.gamma, alpha);
  const Integer level = lcm(p.get_den(), q.get_den());

  // |GL_2(Z/N)| < N^4 bounds the order of g mod N.
  const Integer bound = ipow(level, 4);
  const Mat2Z g_mod = g.mod(level);
  Mat2Z power = g_mod;
  long m = 1;
  while (!power.is_identity_mod(level)) {
    power = (power * g_mod).mod(level);
    ++m;
    if (m > bound) throw std::logic_error("no power of j(gamma) is the identity mod N");
  }
  m *= static_cast<long>(power_multiple);

  TransferData t{g.pow(m), order.gamma.pow(m), m, 0, 0, 0};
  if (t.V.c == 0) throw std::logic_error("transfer matrix with c = 0");
  if (t.V.c < 0) {
    t.V = t.V.inverse();
    t.beta = t.beta.inverse();
  }
  if (t.beta != alpha * Rational(t.V.c) + Rational(t.V.d))
    throw std::logic_error("beta != c*alpha + d");
  t.pprime = p * Rational(t.V.a) + q * Rational(t.V.c);
  t.qprime = p * Rational(t.V.b) + q * Rational(t.V.d);
  t.rho = frac(t.qprime) * Rational(t.V.c) - frac(t.pprime) * Rational(t.V.d);
  return t;
}

bool gamma2_membership(const Mat2Z& m) {
  if (m.det() != 1) return false;
  return mpz_odd_p(m.a.get_mpz_t()) && mpz_odd_p(m.d.get_mpz_t()) &&
         mpz_even_p(m.b.get_mpz_t()) && mpz_even_p(m.c.get_mpz_t());
}

namespace {

// Exponent n minimizing |x + 2 n y| for x, y of opposite parity, y != 0.
// Ties cannot occur: a tie needs x == |y| mod 2|y|.
Integer nearest_multiple(const Integer& x, const Integer& y) {
  const Integer two_y = 2 * y;
  const Integer n0 = floor_div(-x, two_y);
  const Integer n1 = n0 + 1;
  const Integer r0 = abs(Integer(x + two_y * n0));
  const Integer r1 = abs(Integer(x + two_y * n1));
  return r0 <= r1 ? n0 : n1;
}

void apply_power(Mat2Z& m, std::vector<Letter>& applied, Letter pos, Letter neg,
                 const Integer& n) {
  if (n == 0) return;
  const Letter l = n > 0 ? pos : neg;
  const Mat2Z step = letter_matrix(l);
  const Integer count = abs(n);
  for (Integer i = 0; i < count; ++i) {
    m = step * m;
    applied.push_back(l);
  }
}

}  // namespace

Gamma2Word gamma2_word(const Mat2Z& input) {
  if (!gamma2_membership(input))
    throw DomainError("matrix " + to_string(input) + " is not in Gamma(2)");
  Mat2Z m = input;
  std::vector<Letter> applied;
  // Each round strictly decreases max(|a|, |c|): |a| < |c| after the A-step
  // and |c| < |a| after the B-step, by parity.
  while (m.c != 0) {
    apply_power(m, applied, Letter::A, Letter::A_inv, nearest_multiple(m.a, m.c));
    if (m.c == 0) break;
    apply_power(m, applied, Letter::B, Letter::B_inv, nearest_multiple(m.c, m.a));
  }
  // m = applied_k ... applied_1 * input = s * A^t.
  Gamma2Word w;
  w.sign = m.a > 0 ? 1 : -1;
  for (Letter l : applied) w.letters.push_back(inverse(l));
  const Integer t = m.b * w.sign / 2;
  const Letter tl = t > 0 ? Letter::A : Letter::A_inv;
  for (Integer i = 0; i < abs(t); ++i) w.letters.push_back(tl);
  return w;
}

FixingMatrix gamma2_fixing_matrix(const QuadElem& alpha) {
  const OrderData order = lattice_order(alpha);
  const Mat2Z g = j_matrix(order.gamma, alpha);
  Mat2Z c = g;
  for (long m = 1; m <= 6; ++m) {
    if (gamma2_membership(c)) return {c, m};
    c = c * g;
  }
  throw std::logic_error("no power j(gamma)^m, m <= 6, lies in Gamma(2)");
}

}  // namespace quadzeta
