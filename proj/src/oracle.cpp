#include "quadzeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <thread>
#include <vector>

#include "quadzeta/errors.hpp"
#include "quadzeta/functional.hpp"

namespace quadzeta {
namespace {

constexpr unsigned kGuardBits = 64;
// Rounding of one cos/sin evaluation, in units of the working ulp.
constexpr double kTrigUlps = 128.0;

// floor(n u 2^W) mod (period 2^W) for n = 1, 2, ...: n u reduced modulo the
// period at W fractional bits, without rebuilding field elements per term.
class FracMultiples {
 public:
  FracMultiples(const QuadElem& u, unsigned bits, unsigned period = 1)
      : bits_(period == 2 ? bits + 1 : bits), d_(u.radicand()) {
    c_ = lcm(u.x().get_den(), u.y().get_den());
    a_ = (u.x().get_num() * (c_ / u.x().get_den())) << bits;
    b_ = (u.y().get_num() * (c_ / u.y().get_den())) << bits;
    b2d_ = b_ * b_ * d_;
  }

  Integer operator()(std::uint64_t n) const {
    const Integer nz(static_cast<unsigned long>(n));
    const Integer a = a_ * nz;
    Integer f;
    if (b_ == 0) {
      f = floor_div(a, c_);
    } else {
      const Integer s = isqrt(b2d_ * nz * nz);
      f = b_ > 0 ? floor_div(a + s, c_) : floor_div(a - s - 1, c_);
    }
    mpz_fdiv_r_2exp(f.get_mpz_t(), f.get_mpz_t(), bits_);
    return f;
  }

 private:
  unsigned bits_;
  Integer d_;
  Integer c_;
  Integer a_;
  Integer b_;
  Integer b2d_;
};

struct Term {
  Integer re;
  Integer im;
  double error = 0;  // absolute, in value units
  double magnitude = 0;
};

struct ChunkResult {
  Integer re = 0;
  Integer im = 0;
  double error = 0;
  double max_magnitude = 0;
  std::uint64_t max_index = 0;
  double running = 0;  // sum of terms as double
  double late_min = std::numeric_limits<double>::infinity();
  double late_max = -std::numeric_limits<double>::infinity();
};

using TermFn = std::function<Term(std::uint64_t)>;

ChunkResult sum_chunk(const TermFn& term, std::uint64_t first, std::uint64_t last,
                      std::uint64_t late_from, unsigned bits) {
  ChunkResult r;
  for (std::uint64_t n = first; n <= last; ++n) {
    const Term t = term(n);
    r.re += t.re;
    r.im += t.im;
    r.error += t.error;
    if (t.magnitude > r.max_magnitude) {
      r.max_magnitude = t.magnitude;
      r.max_index = n;
    }
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, t.re.get_mpz_t());
    r.running += std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(bits));
    if (n >= late_from) {
      r.late_min = std::min(r.late_min, r.running);
      r.late_max = std::max(r.late_max, r.running);
    }
  }
  return r;
}

SeriesResult sum_series(const TermFn& term, const SeriesConfig& config, bool complex_valued,
                        std::string tail_note) {
  if (config.prec_bits < 16) throw DomainError("prec_bits must be at least 16");
  if (config.terms == 0) throw DomainError("at least one term is required");
  const unsigned work = config.prec_bits + kGuardBits;
  const std::uint64_t n_max = config.terms;
  const std::uint64_t late_from = std::max<std::uint64_t>(1, n_max / 2);

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::clamp<std::uint64_t>(n_max / 1024, 1, threads);

  std::vector<ChunkResult> parts;
  if (chunks == 1) {
    parts.push_back(sum_chunk(term, 1, n_max, late_from, work));
  } else {
    std::vector<std::future<ChunkResult>> futures;
    const std::uint64_t per = n_max / chunks;
    for (std::uint64_t i = 0; i < chunks; ++i) {
      const std::uint64_t first = 1 + i * per;
      const std::uint64_t last = i + 1 == chunks ? n_max : first + per - 1;
      futures.push_back(std::async(std::launch::async, sum_chunk, std::cref(term), first, last,
                                   late_from, work));
    }
    for (auto& f : futures) parts.push_back(f.get());
  }

  // Recombine in index order.
  SeriesResult out;
  Integer re = 0;
  Integer im = 0;
  double offset = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const ChunkResult& p : parts) {
    re += p.re;
    im += p.im;
    out.error_bound += p.error;
    if (p.max_magnitude > out.max_term_magnitude) {
      out.max_term_magnitude = p.max_magnitude;
      out.max_term_index = p.max_index;
    }
    if (p.late_min <= p.late_max) {
      lo = std::min(lo, offset + p.late_min);
      hi = std::max(hi, offset + p.late_max);
    }
    offset += p.running;
  }
  out.value = FixedPoint(re, work).rescaled(config.prec_bits);
  if (complex_valued) out.imag = FixedPoint(im, work).rescaled(config.prec_bits);
  out.error_bound += std::ldexp(1.0, -static_cast<int>(config.prec_bits));
  out.terms_used = n_max;
  out.oscillation = hi >= lo ? hi - lo : 0.0;
  out.tail_note = std::move(tail_note);
  return out;
}

double mantissa_to_double(const Integer& m, unsigned bits) {
  return FixedPoint(m, bits).to_double();
}

void require_k(unsigned k) {
  if (k == 0) throw DomainError("k must be positive");
}

void require_irrational(const QuadElem& alpha) {
  if (alpha.is_rational())
    throw DomainError("alpha = " + to_pretty_string(alpha) + " is rational");
}

[[noreturn]] void resonance(const char* what, std::uint64_t n, unsigned prec) {
  throw ResonanceError(std::string(what) + " at n = " + std::to_string(n) + " is below 2^-" +
                       std::to_string(prec / 2) + "; retry with more precision");
}

std::string tail_note_for(unsigned exponent) {
  if (exponent <= 2)
    return "conditionally convergent; no certified tail bound, see oscillation";
  return "tail not certified; terms decay like max-term/n^" + std::to_string(exponent);
}

}  // namespace

FixedPoint frac_multiple(const QuadElem& alpha, std::uint64_t n, unsigned prec_bits) {
  if (prec_bits < 16) throw DomainError("prec_bits must be at least 16");
  return {FracMultiples(alpha, prec_bits)(n), prec_bits};
}

SeriesResult psi_series(const QuadElem& alpha, unsigned k, const SeriesConfig& config) {
  require_k(k);
  require_irrational(alpha);
  const unsigned work = config.prec_bits + kGuardBits;
  const double ulp = std::ldexp(1.0, -static_cast<int>(work));
  const Integer floor_limit = pow2(work - config.prec_bits / 2);
  const Integer one_sq = pow2(2 * work);
  // sec(pi x) has period 2, so the parity of floor(n alpha) matters.
  const FracMultiples frac_n(alpha, work, 2);
  TermFn term = [&, k](std::uint64_t n) {
    const CosSin cs = cos_sin_pi(frac_n(n), work);
    if (abs(cs.cos) < floor_limit) resonance("|cos(pi n alpha)|", n, config.prec_bits);
    const Integer sec = one_sq / cs.cos;
    const Integer nk = ipow(Integer(static_cast<unsigned long>(n)), 2 * k);
    Term t{sec / nk, 0};
    const double sec_d = std::abs(mantissa_to_double(sec, work));
    const double nk_d = std::pow(static_cast<double>(n), 2.0 * k);
    t.error = (kTrigUlps * sec_d * sec_d + 1.0) * ulp / nk_d + ulp;
    t.magnitude = sec_d / nk_d;
    return t;
  };
  return sum_series(term, config, false, tail_note_for(2 * k));
}

SeriesResult xi_series(const QuadElem& alpha, unsigned k, const SeriesConfig& config) {
  require_k(k);
  require_irrational(alpha);
  const unsigned work = config.prec_bits + kGuardBits;
  const double ulp = std::ldexp(1.0, -static_cast<int>(work));
  const Integer floor_limit = pow2(work - config.prec_bits / 2);
  const FracMultiples frac_n(alpha, work);
  TermFn term = [&, k](std::uint64_t n) {
    const CosSin cs = cos_sin_pi(frac_n(n), work);
    if (abs(cs.sin) < floor_limit) resonance("|sin(pi n alpha)|", n, config.prec_bits);
    const Integer cot = (cs.cos << work) / cs.sin;
    const Integer nk = ipow(Integer(static_cast<unsigned long>(n)), 2 * k + 1);
    Term t{cot / nk, 0};
    const double inv_s = 1.0 / std::abs(mantissa_to_double(cs.sin, work));
    const double nk_d = std::pow(static_cast<double>(n), 2.0 * k + 1.0);
    t.error = kTrigUlps * ulp * (inv_s + inv_s * inv_s) / nk_d + ulp;
    t.magnitude = std::abs(mantissa_to_double(cot, work)) / nk_d;
    return t;
  };
  return sum_series(term, config, false, tail_note_for(2 * k + 1));
}

SeriesResult eta_h_series(const QuadElem& alpha, unsigned k, const Rational& p, const Rational& q,
                          const SeriesConfig& config) {
  require_k(k);
  require_irrational(alpha);
  const unsigned work = config.prec_bits + kGuardBits;
  const double ulp = std::ldexp(1.0, -static_cast<int>(work));
  const Integer floor_limit = pow2(work - config.prec_bits / 2);
  const FracMultiples theta(alpha, work);
  // e(n(<p> alpha + q)) and e(n(<-p> alpha - q)).
  const FracMultiples phase_plus(alpha * frac_angle(p) + q, work);
  const FracMultiples phase_minus(alpha * frac_angle(-p) - q, work);
  TermFn term = [&, k](std::uint64_t n) {
    // 1 / (1 - e(theta)) = 1/2 + (i/2) cot(pi theta)
    const CosSin ct = cos_sin_pi(theta(n), work);
    if (abs(ct.sin) < floor_limit) resonance("|sin(pi n alpha)|", n, config.prec_bits);
    const Integer cot = (ct.cos << work) / ct.sin;
    const CosSin e1 = cos_sin_pi(phase_plus(n) << 1, work);
    const CosSin e2 = cos_sin_pi(phase_minus(n) << 1, work);
    const Integer dre = e1.cos - e2.cos;
    const Integer dim = e1.sin - e2.sin;
    Integer re = dre - ((dim * cot) >> work);
    Integer im = ((dre * cot) >> work) + dim;
    const Integer nk = ipow(Integer(static_cast<unsigned long>(n)), 2 * k);
    re /= 2 * nk;
    im /= 2 * nk;
    const double inv_s = 1.0 / std::abs(mantissa_to_double(ct.sin, work));
    const double cot_d = std::abs(mantissa_to_double(cot, work));
    const double nk_d = std::pow(static_cast<double>(n), 2.0 * k);
    Term t{std::move(re), std::move(im)};
    t.error = kTrigUlps * ulp * (2.0 + 2.0 * cot_d + 2.0 * (inv_s + inv_s * inv_s)) / nk_d + ulp;
    t.magnitude = std::abs(mantissa_to_double(t.re, work));
    return t;
  };
  return sum_series(term, config, true, tail_note_for(2 * k));
}

FixedPoint pi_power(unsigned e, unsigned bits) {
  const unsigned work = bits + 64;
  const FixedPoint pi = pi_fixed(work);
  FixedPoint r(pow2(work), work);
  for (unsigned i = 0; i < e; ++i) r = r * pi;
  return r.rescaled(bits);
}

LerchResidual lerch_fe_residual(const QuadElem& alpha, unsigned k, const SeriesConfig& config) {
  require_k(k);
  require_irrational(alpha);
  if (sign(alpha) <= 0) throw DomainError("Lerch residual requires alpha > 0");
  const unsigned bits = config.prec_bits;
  const SeriesResult xa = xi_series(alpha, k, config);
  const SeriesResult xinv = xi_series(alpha.inverse(), k, config);
  const FixedPoint a2k = FixedPoint::from_quad(alpha.pow(2 * static_cast<long>(k)), bits);
  const FixedPoint lhs = xa.value + a2k * xinv.value;
  const FixedPoint two_pi_pow =
      pi_power(2 * k + 1, bits) * FixedPoint(pow2(bits + 2 * k + 1), bits);
  const FixedPoint rhs =
      two_pi_pow * FixedPoint::from_quad(phi(alpha, 2 * k + 1), bits);
  LerchResidual r{lhs - rhs, lhs + rhs, 0};
  r.fitting_sign = abs(r.minus_residual.mantissa()) <= abs(r.plus_residual.mantissa()) ? 1 : -1;
  return r;
}

}  // namespace quadzeta
