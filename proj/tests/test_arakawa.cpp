#include <cmath>

#include "doctest.h"
#include "quadzeta/arakawa.hpp"
#include "quadzeta/bernoulli.hpp"
#include "quadzeta/errors.hpp"
#include "quadzeta/oracle.hpp"

using namespace quadzeta;

namespace {

QuadElem q(long x, long y, long d) { return QuadElem(Rational(x), Rational(y), Integer(d)); }

// Literal double sum over j and l with exact Bernoulli polynomials, used as
// an oracle for the moment-based evaluation.
QuadElem naive_h(const QuadElem& alpha, unsigned k, const Rational& p, const Rational& qq,
                 unsigned mult = 1) {
  const TransferData t = find_transfer_matrix(alpha, p, qq, mult);
  const long c = t.V.c.get_si();
  const Rational d(t.V.d);
  const unsigned L = 2 * k + 1;
  QuadElem sum = QuadElem::rational(0, alpha.radicand());
  for (long j = 1; j <= c; ++j) {
    const Rational x = (Rational(j) - frac(p)) / Rational(c);
    const Rational y = frac((Rational(j) * d + t.rho) / Rational(c));
    for (unsigned l = 0; l <= L; ++l) {
      const Rational coeff = bernoulli_poly(l, x) * bernoulli_poly(L - l, y);
      sum += (-t.beta).pow(static_cast<long>(l) - 1) * coeff;
    }
  }
  const Rational pref = Rational(pow2(2 * k)) * (k % 2 == 0 ? 1 : -1);
  return sum * pref / (t.beta.pow(2 * static_cast<long>(k) - 1) - Rational(1));
}

}  // namespace

TEST_CASE("h_special_value matches the literal double sum") {
  CHECK(h_special_value(q(0, 2, 2), 1, Rational(1, 4), 0) == naive_h(q(0, 2, 2), 1, Rational(1, 4), 0));
  CHECK(h_special_value(q(0, 2, 2), 3, Rational(1, 4), 0) == naive_h(q(0, 2, 2), 3, Rational(1, 4), 0));
  CHECK(h_special_value(q(0, 1, 2), 2, Rational(2, 3), Rational(1, 3)) ==
        naive_h(q(0, 1, 2), 2, Rational(2, 3), Rational(1, 3)));
  const QuadElem golden = parse_quad("(1+sqrt(5))/2");
  CHECK(h_special_value(golden, 2, Rational(-1, 3), Rational(1, 3)) ==
        naive_h(golden, 2, Rational(-1, 3), Rational(1, 3)));
  CHECK(h_special_value(parse_quad("1+sqrt(5)"), 1, Rational(1, 4), 0) ==
        naive_h(parse_quad("1+sqrt(5)"), 1, Rational(1, 4), 0));
}

TEST_CASE("h_special_value examples") {
  CHECK(h_special_value(q(0, 2, 2), 1, Rational(1, 4), 0) ==
        QuadElem::rational(Rational(-1, 6), Integer(2)));
  for (unsigned k = 1; k <= 3; ++k) {
    const QuadElem h = h_special_value(q(0, 2, 2), k, Rational(1, 4), 0);
    CHECK(h * Rational(2) == secant_value_arakawa(q(0, 1, 2), k).value);
  }
  ArakawaOptions doubled;
  doubled.power_multiple = 2;
  CHECK(h_special_value(q(0, 2, 2), 1, Rational(1, 4), 0, doubled) ==
        h_special_value(q(0, 2, 2), 1, Rational(1, 4), 0));
}

TEST_CASE("h_special_value agrees with the eta series for general (p, q)") {
  // Absolutely convergent at k = 2; the tail is O(1/N^2).
  SeriesConfig cfg;
  cfg.terms = 20000;
  for (const auto& [expr, p, qq] :
       {std::tuple{"sqrt(2)", Rational(2, 3), Rational(1, 3)},
        std::tuple{"(1+sqrt(5))/2", Rational(-1, 3), Rational(1, 3)},
        std::tuple{"2*sqrt(3)", Rational(1, 4), Rational(0)}}) {
    CAPTURE(expr);
    const QuadElem alpha = parse_quad(expr);
    const QuadElem exact = h_special_value(alpha, 2, p, qq);
    const SeriesResult series = eta_h_series(alpha, 2, p, qq, cfg);
    const double expected = to_double(exact) * std::pow(M_PI, 4);
    CHECK(series.value.to_double() == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("secant_value_arakawa examples") {
  const QuadElem third = QuadElem::rational(Rational(-1, 3), Integer(2));
  CHECK(secant_value_arakawa(q(0, 1, 2), 1).value == third);
  CHECK(secant_value_arakawa(q(0, -1, 2), 1).value == third);
  CHECK(secant_value_arakawa(q(2, 1, 2), 1).value == third);
  CHECK(secant_value_arakawa(q(0, 1, 2), 2).value ==
        QuadElem::rational(Rational(-7, 180), Integer(2)));
  CHECK(secant_value_arakawa(q(0, 1, 2), 3).value ==
        QuadElem::rational(Rational(-43, 10962), Integer(2)));
  const QuadElem golden = parse_quad("(1+sqrt(5))/2");
  CHECK(secant_value_arakawa(golden, 1).value == parse_quad("1/24 + 1/8*sqrt(5)"));
  CHECK(secant_value_arakawa(golden, 2).value == parse_quad("-11/27360 + 23/1824*sqrt(5)"));
  const SpecialValue sv = secant_value_arakawa(golden, 1);
  CHECK(sv.method == Method::arakawa);
  CHECK(sv.k == 1);
  CHECK(sv.alpha == golden);
}

TEST_CASE("transfer independence") {
  for (const char* expr : {"2*sqrt(2)", "2*sqrt(3)", "1+sqrt(5)"}) {
    CAPTURE(expr);
    const QuadElem alpha = parse_quad(expr);
    const QuadElem base = h_special_value(alpha, 1, Rational(1, 4), 0);
    ArakawaOptions opts;
    opts.power_multiple = 2;
    CHECK(h_special_value(alpha, 1, Rational(1, 4), 0, opts) == base);
  }
}

TEST_CASE("symmetries, rationality and Galois equivariance") {
  for (long d : {2L, 3L, 5L, 6L, 7L, 8L, 10L}) {
    for (unsigned k = 1; k <= 2; ++k) {
      CAPTURE(d);
      const QuadElem alpha = QuadElem::sqrt_of(Integer(d));
      const QuadElem v = secant_value_arakawa(alpha, k).value;
      CHECK(v.y() == 0);
      CHECK(secant_value_arakawa(-alpha, k).value == v);
      CHECK(secant_value_arakawa(alpha + Rational(2), k).value == v);
    }
  }
  for (const char* expr : {"1+sqrt(3)", "(1+sqrt(5))/2", "2+sqrt(2)"}) {
    for (unsigned k = 1; k <= 2; ++k) {
      CAPTURE(expr);
      const QuadElem alpha = parse_quad(expr);
      CHECK(secant_value_arakawa(alpha, k).value.conj() ==
            secant_value_arakawa(alpha.conj(), k).value);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  ArakawaOptions one;
  one.threads = 1;
  one.power_multiple = 2;  // c = 235416, enough for several chunks
  ArakawaOptions many = one;
  many.threads = 5;
  CHECK(h_special_value(q(0, 2, 2), 2, Rational(1, 4), 0, one) ==
        h_special_value(q(0, 2, 2), 2, Rational(1, 4), 0, many));
}

TEST_CASE("native and multiprecision moment paths agree") {
  // k = 6 at c = 204 overflows 128 bits and takes the GMP path; k = 1 stays
  // native. Both are checked against the literal sum.
  CHECK(h_special_value(q(0, 2, 2), 6, Rational(1, 4), 0) == naive_h(q(0, 2, 2), 6, Rational(1, 4), 0));
}

TEST_CASE("h_special_value errors") {
  CHECK_THROWS_AS(h_special_value(q(0, 2, 2), 1, Rational(1), 0), DomainError);
  CHECK_THROWS_AS(h_special_value(QuadElem::rational(1, Integer(2)), 1, Rational(1, 4), 0),
                  DomainError);
  CHECK_THROWS_AS(h_special_value(q(0, 2, 2), 0, Rational(1, 4), 0), DomainError);
  ArakawaOptions capped;
  capped.c_cap = 100;
  CHECK_THROWS_AS(h_special_value(q(0, 2, 2), 1, Rational(1, 4), 0, capped), ResourceError);
  CHECK_THROWS_AS(secant_value_arakawa(q(0, 1, 2), 1, capped), ResourceError);
}
