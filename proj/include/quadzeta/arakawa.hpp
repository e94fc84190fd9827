#pragma once

// Closed-form special values of Arakawa's generalized eta-functions,
//
//   H(alpha, 1-2k, p, q) / pi^{2k}
//     = 2^{2k} (-1)^k / (beta^{2k-1} - 1)
//       * sum_{j=1}^{c} sum_{l=0}^{2k+1} b_l((j - {p})/c) b_{2k+1-l}({(j d + rho)/c}) (-beta)^{l-1},
//
// and through psi(alpha/2, 2k) = 2 H(alpha, 1-2k, 1/4, 0) the secant zeta
// values psi(alpha0, 2k) / pi^{2k}.

#include <cstdint>

#include "quadzeta/modular.hpp"
#include "quadzeta/quad_field.hpp"

namespace quadzeta {

enum class Method : std::uint8_t { arakawa, lrr };

const char* to_string(Method m);

struct SpecialValue {
  QuadElem alpha;
  unsigned k = 0;
  /// psi(alpha, 2k) / pi^{2k} (or H / pi^{2k}), an element of Q(alpha).
  QuadElem value;
  Method method = Method::arakawa;
};

struct ArakawaOptions {
  /// Largest admissible c entry of the transfer matrix; beyond it the
  /// evaluation throws ResourceError.
  std::uint64_t c_cap = 10'000'000;
  /// Use the transfer power power_multiple * m instead of the least m.
  unsigned power_multiple = 1;
  /// Worker threads for the j-sum; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// H(alpha, 1-2k, p, q) / pi^{2k}. Requires k >= 1 and p not in Z.
QuadElem h_special_value(const QuadElem& alpha, unsigned k, const Rational& p, const Rational& q,
                         const ArakawaOptions& options = {});

/// Same double sum from an explicit transfer matrix.
QuadElem h_special_value(const TransferData& transfer, unsigned k, const Rational& p,
                         const Rational& q, const ArakawaOptions& options = {});

/// psi(alpha0, 2k) / pi^{2k} as 2 H(2 alpha0, 1-2k, 1/4, 0) / pi^{2k}.
SpecialValue secant_value_arakawa(const QuadElem& alpha0, unsigned k,
                                  const ArakawaOptions& options = {});

}  // namespace quadzeta
