#pragma once

// Functional-equation route to the secant values: affine relations
// psi(M alpha, 2k) = u psi(alpha, 2k) + v pi^{2k} for the generators of
// Gamma(2), propagated along words, and solved at a fixed point C alpha =
// alpha. Also Lerch's cotangent values at units.

#include <optional>

#include "quadzeta/arakawa.hpp"
#include "quadzeta/modular.hpp"
#include "quadzeta/oracle.hpp"
#include "quadzeta/quad_field.hpp"

namespace quadzeta {

struct AffineRel {
  QuadElem u;
  QuadElem v;
  unsigned k = 0;
  QuadElem base_alpha;
};

/// Bernoulli-Euler correction of the B-relation,
/// F(a, k) = 1/(2k)! sum_{m=0}^{2k} (2^{m-1} - 1) B_m E_{2k-m} C(2k, m)
///           (a + 1)^{2k-m} ((2a + 1)^{m-2k} - (2a + 1)^{1-2k}).
QuadElem lrr_correction(const QuadElem& alpha, unsigned k);

/// Relation for a single generator at alpha:
///   A, A^-1:  (1, 0)
///   B:        ((2a+1)^{1-2k}, (-1)^k F(a, k))
///   B^-1:     ((2a'+1)^{2k-1}, -(-1)^k (2a'+1)^{2k-1} F(a', k)),  a' = B^-1 a
AffineRel base_affine(Letter letter, const QuadElem& alpha, unsigned k);

/// Relation for the word's product matrix, folded right to left.
AffineRel word_affine(const Gamma2Word& word, const QuadElem& alpha, unsigned k);

/// psi(alpha0, 2k) / pi^{2k} = V / (1 - U) from the relation of the Gamma(2)
/// word of the matrix fixing alpha0.
SpecialValue secant_value_lrr(const QuadElem& alpha0, unsigned k);

/// phi(a, n) = sum_{j=0}^{n+1} B_j B_{n+1-j} / (j! (n+1-j)!) a^{j-1}.
QuadElem phi(const QuadElem& alpha, unsigned n);

struct CotangentValue {
  /// phi(a, 2k+1) / (sqrt(D) (1 - eps a^{2k})), the closed form as stated.
  Rational formula_value;
  Rational magnitude;
  /// Norm of the unit, +-1.
  int epsilon = 0;
  /// True when the numeric series fixed the sign and matched the magnitude.
  bool sign_adjudicated = false;
  /// Sign of the numeric xi series; 0 when no check was run.
  int oracle_sign = 0;
  /// xi(a, 2k+1) / ((2 pi)^{2k+1} sqrt(D)) from the series, when run.
  std::optional<double> oracle_ratio;
  /// magnitude * oracle_sign when adjudicated, otherwise formula_value.
  Rational value;
};

/// Cotangent value at a unit alpha = (a + b sqrt(d))/2 != +-1. With a series
/// configuration the sign is adjudicated numerically.
CotangentValue cotangent_unit_value(const QuadElem& alpha, unsigned k,
                                    const std::optional<SeriesConfig>& adjudicate = std::nullopt);

}  // namespace quadzeta
