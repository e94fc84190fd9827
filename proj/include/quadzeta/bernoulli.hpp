#pragma once

// Bernoulli numbers, normalized Bernoulli polynomials and Euler numbers.
//
// Conventions:
//   u e^{ux} / (e^u - 1) = sum_l b_l(x) u^l      (normalized polynomials)
//   B_n = n! b_n(0), so B_1 = -1/2
//   sech t = sum_n E_n t^n / n!                   (E_2 = -1, E_4 = 5)

#include "quadzeta/rational.hpp"

namespace quadzeta {

/// B_n, memoized in a process-wide cache safe for concurrent readers.
Rational bernoulli_number(unsigned n);

/// b_l(x) = sum_{i=0}^{l} B_i / (i! (l-i)!) x^{l-i}; the classical Bernoulli
/// polynomial divided by l!.
Rational bernoulli_poly(unsigned l, const Rational& x);

/// E_n, memoized; zero for odd n.
Integer euler_number(unsigned n);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace quadzeta
