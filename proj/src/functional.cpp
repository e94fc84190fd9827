#include "quadzeta/functional.hpp"

#include <cmath>
#include <stdexcept>

#include "quadzeta/bernoulli.hpp"
#include "quadzeta/errors.hpp"

namespace quadzeta {
namespace {

void require_irrational(const QuadElem& alpha) {
  if (alpha.is_rational())
    throw DomainError("alpha = " + to_pretty_string(alpha) +
                      " is rational; a quadratic irrationality is required");
}

QuadElem constant(long value, const QuadElem& like) {
  return QuadElem::rational(Rational(value), like.radicand());
}

}  // namespace

QuadElem lrr_correction(const QuadElem& alpha, unsigned k) {
  const QuadElem t = alpha * Rational(2) + Rational(1);
  const QuadElem a1 = alpha + Rational(1);
  const auto two_k = static_cast<long>(2 * k);
  const QuadElem t_low = t.pow(1 - two_k);
  QuadElem sum = constant(0, alpha);
  for (long m = 0; m <= two_k; ++m) {
    const Rational bm = bernoulli_number(static_cast<unsigned>(m));
    const Integer em = euler_number(static_cast<unsigned>(two_k - m));
    if (bm == 0 || em == 0) continue;
    const Rational weight = (rpow(Rational(2), m - 1) - 1) * bm * Rational(em) *
                            Rational(binomial(static_cast<unsigned>(two_k), static_cast<unsigned>(m)));
    sum += a1.pow(two_k - m) * (t.pow(m - two_k) - t_low) * weight;
  }
  return sum / Rational(factorial(2 * k));
}

AffineRel base_affine(Letter letter, const QuadElem& alpha, unsigned k) {
  require_irrational(alpha);
  if (k == 0) throw DomainError("k must be positive");
  const auto two_k = static_cast<long>(2 * k);
  const Rational parity = k % 2 == 0 ? 1 : -1;  // (-1)^k
  switch (letter) {
    case Letter::A:
    case Letter::A_inv:
      return {constant(1, alpha), constant(0, alpha), k, alpha};
    case Letter::B: {
      const QuadElem t = alpha * Rational(2) + Rational(1);
      return {t.pow(1 - two_k), lrr_correction(alpha, k) * parity, k, alpha};
    }
    case Letter::B_inv: {
      const QuadElem prev = mobius(letter_matrix(Letter::B_inv), alpha);
      const QuadElem u = (prev * Rational(2) + Rational(1)).pow(two_k - 1);
      return {u, u * lrr_correction(prev, k) * (-parity), k, alpha};
    }
  }
  throw std::logic_error("bad letter");
}

AffineRel word_affine(const Gamma2Word& word, const QuadElem& alpha, unsigned k) {
  require_irrational(alpha);
  if (k == 0) throw DomainError("k must be positive");
  AffineRel rel{constant(1, alpha), constant(0, alpha), k, alpha};
  QuadElem point = alpha;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    const AffineRel step = base_affine(*it, point, k);
    rel.v = step.u * rel.v + step.v;
    rel.u = step.u * rel.u;
    point = mobius(letter_matrix(*it), point);
  }
  return rel;
}

SpecialValue secant_value_lrr(const QuadElem& alpha0, unsigned k) {
  require_irrational(alpha0);
  if (k == 0) throw DomainError("k must be positive");
  const FixingMatrix fix = gamma2_fixing_matrix(alpha0);
  const Gamma2Word word = gamma2_word(fix.C);
  const AffineRel rel = word_affine(word, alpha0, k);
  const QuadElem denom = constant(1, alpha0) - rel.u;
  if (denom.is_zero()) throw std::logic_error("fixed-point relation is degenerate (U = 1)");
  return {alpha0, k, rel.v / denom, Method::lrr};
}

QuadElem phi(const QuadElem& alpha, unsigned n) {
  if (alpha.is_zero()) throw DomainError("phi requires alpha != 0");
  QuadElem sum = constant(0, alpha);
  QuadElem power = alpha.inverse();  // alpha^{j-1} at j = 0
  for (unsigned j = 0; j <= n + 1; ++j) {
    const Rational bj = bernoulli_number(j);
    const Rational bk = bernoulli_number(n + 1 - j);
    if (bj != 0 && bk != 0)
      sum += power * (bj * bk / Rational(factorial(j) * factorial(n + 1 - j)));
    power *= alpha;
  }
  return sum;
}

CotangentValue cotangent_unit_value(const QuadElem& alpha, unsigned k,
                                    const std::optional<SeriesConfig>& adjudicate) {
  if (k == 0) throw DomainError("k must be positive");
  if (alpha.is_rational())
    throw DomainError("cotangent value requires a unit other than +-1, got " +
                      to_pretty_string(alpha));
  const Rational nm = alpha.norm();
  const Rational tr = alpha.trace();
  if ((nm != 1 && nm != -1) || !is_integer(tr))
    throw DomainError(to_pretty_string(alpha) + " is not a unit (norm " + to_string(nm) +
                      ", trace " + to_string(tr) + ")");
  const int eps = nm == 1 ? 1 : -1;
  // 1/alpha = -eps (alpha - a), a the trace.
  if (alpha.inverse() != (alpha - tr) * Rational(-eps))
    throw std::logic_error("unit inverse identity failed");

  const auto two_k = static_cast<long>(2 * k);
  const QuadElem denom = constant(1, alpha) - alpha.pow(two_k) * Rational(eps);
  const QuadElem ratio = phi(alpha, 2 * k + 1) / denom / QuadElem::sqrt_of(alpha.radicand());
  if (!ratio.is_rational()) throw std::logic_error("cotangent closed form is not rational");

  CotangentValue out;
  out.formula_value = ratio.x();
  out.magnitude = abs(ratio.x());
  out.epsilon = eps;
  out.value = out.formula_value;
  if (!adjudicate) return out;

  const SeriesResult xi = xi_series(alpha, k, *adjudicate);
  const double scale =
      std::pow(2.0 * M_PI, 2.0 * k + 1.0) * std::sqrt(alpha.radicand().get_d());
  const double series = xi.value.to_double();
  out.oracle_ratio = series / scale;
  out.oracle_sign = xi.value.sign();
  const double expected = out.magnitude.get_d();
  const bool sign_resolved = std::abs(series) > xi.error_bound;
  const bool magnitude_matches =
      expected > 0 && std::abs(std::abs(*out.oracle_ratio) - expected) <= 1e-3 * expected;
  out.sign_adjudicated = sign_resolved && magnitude_matches && out.oracle_sign != 0;
  if (out.sign_adjudicated) out.value = out.magnitude * out.oracle_sign;
  return out;
}

}  // namespace quadzeta
