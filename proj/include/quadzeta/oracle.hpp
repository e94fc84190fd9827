#pragma once

// Deterministic high-precision partial sums of the defining series
//
//   psi(alpha, 2k)   = sum_n sec(pi n alpha) / n^{2k}
//   xi(alpha, 2k+1)  = sum_n cot(pi n alpha) / n^{2k+1}
//   H(alpha, 1-2k, p, q) = eta(alpha, 1-2k, <p>, q) - eta(alpha, 1-2k, <-p>, -q)
//
// in binary fixed point. Terms are computed at prec_bits + 64 bits and summed
// exactly, so the result does not depend on the thread count.

#include <cstdint>
#include <optional>
#include <string>

#include "quadzeta/fixed_point.hpp"
#include "quadzeta/quad_field.hpp"

namespace quadzeta {

struct SeriesResult {
  FixedPoint value;
  /// Imaginary part, for complex-valued series.
  std::optional<FixedPoint> imag;
  std::uint64_t terms_used = 0;
  double max_term_magnitude = 0;
  std::uint64_t max_term_index = 0;
  /// Bound on the accumulated rounding error of `value` (not the tail).
  double error_bound = 0;
  /// max - min of the partial sums S_n for N/2 <= n <= N.
  double oscillation = 0;
  std::string tail_note;
};

struct SeriesConfig {
  std::uint64_t terms = 100'000;
  unsigned prec_bits = 128;
  /// 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// {n alpha} truncated to prec_bits fractional bits (error < 2^-prec_bits).
FixedPoint frac_multiple(const QuadElem& alpha, std::uint64_t n, unsigned prec_bits);

/// sum_{n<=N} sec(pi {n alpha}) / n^{2k}. Throws ResonanceError when some
/// |cos| < 2^{-prec_bits/2}.
SeriesResult psi_series(const QuadElem& alpha, unsigned k, const SeriesConfig& config = {});

/// sum_{n<=N} cot(pi {n alpha}) / n^{2k+1}. Throws ResonanceError when some
/// |sin| < 2^{-prec_bits/2}.
SeriesResult xi_series(const QuadElem& alpha, unsigned k, const SeriesConfig& config = {});

/// Partial sums of H(alpha, 1-2k, p, q) with e(s/2) = -1; value is the real
/// part, imag the imaginary part.
SeriesResult eta_h_series(const QuadElem& alpha, unsigned k, const Rational& p, const Rational& q,
                          const SeriesConfig& config = {});

struct LerchResidual {
  /// xi(a) + a^{2k} xi(1/a) - (2 pi)^{2k+1} phi(a, 2k+1)
  FixedPoint minus_residual;
  /// xi(a) + a^{2k} xi(1/a) + (2 pi)^{2k+1} phi(a, 2k+1)
  FixedPoint plus_residual;
  /// s such that xi(a) + a^{2k} xi(1/a) = s (2 pi)^{2k+1} phi fits best.
  int fitting_sign = 0;
};

/// Residuals of Lerch's functional equation under both sign conventions.
/// Requires alpha > 0.
LerchResidual lerch_fe_residual(const QuadElem& alpha, unsigned k,
                                const SeriesConfig& config = {});

/// pi^e as a fixed-point number at `bits`.
FixedPoint pi_power(unsigned e, unsigned bits);

}  // namespace quadzeta
