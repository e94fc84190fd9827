#pragma once

// Independent reference computations shared by the unit suites and the
// acceptance run. None of them call the code paths they are used to check.

#include <cmath>
#include <optional>
#include <string>
#include <random>
#include <vector>

#include "quadzeta/bernoulli.hpp"
#include "quadzeta/modular.hpp"
#include "quadzeta/quad_field.hpp"

namespace quadzeta::oracle {

// Invert the power series (e^u - 1)/u = sum u^i/(i+1)! coefficient by
// coefficient; B_n = n! g_n for g = 1/f.
inline std::vector<Rational> bernoulli_by_series_inversion(unsigned count) {
  std::vector<Rational> f(count);
  for (unsigned i = 0; i < count; ++i) f[i] = Rational(1) / Rational(factorial(i + 1));
  std::vector<Rational> g(count);
  for (unsigned n = 0; n < count; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (unsigned i = 1; i <= n; ++i) acc -= f[i] * g[n - i];
    g[n] = acc / f[0];
  }
  std::vector<Rational> b(count);
  for (unsigned n = 0; n < count; ++n) b[n] = g[n] * Rational(factorial(n));
  return b;
}

// Same for sech t = 1 / cosh t.
inline std::vector<Rational> euler_by_series_inversion(unsigned count) {
  std::vector<Rational> f(count, Rational(0));
  for (unsigned i = 0; i < count; i += 2) f[i] = Rational(1) / Rational(factorial(i));
  std::vector<Rational> g(count);
  for (unsigned n = 0; n < count; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (unsigned i = 1; i <= n; ++i) acc -= f[i] * g[n - i];
    g[n] = acc;
  }
  std::vector<Rational> e(count);
  for (unsigned n = 0; n < count; ++n) e[n] = g[n] * Rational(factorial(n));
  return e;
}

inline std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = static_cast<Letter>(pick(rng));
  return w;
}

inline std::vector<Letter> free_reduction(const std::vector<Letter>& w) {
  std::vector<Letter> stack;
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

struct PellSolution {
  long t;
  long u;
};

// Smallest u in [1, u_max] with t^2 - disc u^2 = +-4, t > 0.
inline std::optional<PellSolution> pell_search(long disc, long u_max) {
  for (long u = 1; u <= u_max; ++u) {
    const long base = disc * u * u;
    for (long target : {base - 4, base + 4}) {
      auto t = static_cast<long>(std::sqrt(static_cast<double>(target)));
      while (t * t > target) --t;
      while ((t + 1) * (t + 1) <= target) ++t;
      if (t * t == target) return PellSolution{t, u};
    }
  }
  return std::nullopt;
}

// Units (t + u sqrt(disc))/2 of norm +-1 in the order of discriminant disc,
// from trace t. Empty when no such unit exists.
inline std::vector<QuadElem> units_with_trace(long disc, const Integer& t) {
  std::vector<QuadElem> out;
  for (long n : {1L, -1L}) {
    const Integer rest = t * t - Integer(4 * n);
    if (rest <= 0 || rest % disc != 0) continue;
    const Integer u2 = rest / disc;
    if (mpz_perfect_square_p(u2.get_mpz_t()) == 0) continue;
    Integer u;
    mpz_sqrt(u.get_mpz_t(), u2.get_mpz_t());
    out.push_back((QuadElem::sqrt_of(Integer(disc)) * Rational(u) + Rational(t)) / Rational(2));
  }
  return out;
}

// Certifies that eps is the fundamental unit (> 1) of the order of
// discriminant disc: it is a unit of that order, and no p-th root of it for
// a prime p lies in the order. Candidate roots come from integer p-th roots
// of eps 2^{p S}; their traces are rounded and checked exactly. Returns an
// empty string on success, otherwise the reason.
inline std::string certify_fundamental_unit(long disc, const QuadElem& eps) {
  const QuadElem root = QuadElem::sqrt_of(Integer(disc));
  const QuadElem coords = (eps - eps.conj()) / root;  // u, rational
  const Rational t = eps.trace();
  if (coords.y() != 0 || !is_integer(coords.x()) || !is_integer(t)) return "not in the order";
  const Integer u = coords.x().get_num();
  const Integer tt = t.get_num();
  const Integer norm4 = tt * tt - Integer(disc) * u * u;
  if (norm4 != 4 && norm4 != -4) return "not a unit";
  if (u <= 0 || tt <= 0) return "not the unit above 1";

  constexpr unsigned kS = 48;
  const std::size_t eps_bits = mpz_sizeinbase(floor(eps).get_mpz_t(), 2);
  for (unsigned p = 2; p <= eps_bits + 1; ++p) {
    bool prime = true;
    for (unsigned f = 2; f * f <= p; ++f) prime = prime && p % f != 0;
    if (!prime) continue;
    Integer r;
    mpz_root(r.get_mpz_t(), floor_scaled(eps, p * kS).get_mpz_t(), p);
    const Rational eta = make_rational(r, pow2(kS));
    if (eta <= 1) break;
    const Rational inv = Rational(1) / eta;
    for (const Rational& guess : {Rational(eta + inv), Rational(eta - inv)}) {
      for (long shift = -1; shift <= 1; ++shift) {
        const Integer trace = floor(guess + Rational(1, 2)) + shift;
        for (const QuadElem& cand : units_with_trace(disc, trace)) {
          if (sign(cand - Rational(1)) > 0 && cand.pow(p) == eps)
            return "is a " + std::to_string(p) + "-th power";
        }
      }
    }
  }
  return {};
}

}  // namespace quadzeta::oracle
