#include "quadzeta/arakawa.hpp"

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

#include "quadzeta/bernoulli.hpp"
#include "quadzeta/errors.hpp"

namespace quadzeta {

const char* to_string(Method m) { return m == Method::arakawa ? "arakawa" : "lrr"; }

namespace {

using u128 = unsigned __int128;

// Power sums T[a][b] = sum_j X_j^a Y_j^b over a block of j, for a + b <= L,
// where X_j = N j - N{p} and Y_j = (N j d + N rho) mod M, M = N c. Every
// Bernoulli-polynomial argument of the double sum is X_j / M or Y_j / M.
struct MomentProblem {
  unsigned L = 0;
  Integer N;
  Integer M;
  Integer n_frac_p;  // N {p}
  Integer y_step;    // N d mod M
  Integer y_offset;  // N rho mod M
};

std::size_t moment_index(unsigned L, unsigned a, unsigned b) { return a * (L + 1) + b; }

Integer start_y(const MomentProblem& pr, std::uint64_t j) {
  Integer y = pr.y_step * Integer(static_cast<unsigned long>(j)) + pr.y_offset;
  mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), pr.M.get_mpz_t());
  return y;
}

Integer start_x(const MomentProblem& pr, std::uint64_t j) {
  return pr.N * Integer(static_cast<unsigned long>(j)) - pr.n_frac_p;
}

Integer from_u128(u128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  const auto lo = static_cast<std::uint64_t>(v);
  Integer r(static_cast<unsigned long>(hi));
  r <<= 64;
  r += static_cast<unsigned long>(lo);
  return r;
}

std::uint64_t to_u64(const Integer& z) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(z.get_mpz_t());
}

// Native path: every partial sum is below c * M^L < 2^127.
std::vector<Integer> moments_native(const MomentProblem& pr, std::uint64_t first,
                                    std::uint64_t last) {
  const unsigned L = pr.L;
  std::vector<u128> t((L + 1) * (L + 1), 0);
  const std::uint64_t m = to_u64(pr.M);
  const std::uint64_t nx = to_u64(pr.N);
  const std::uint64_t step = to_u64(pr.y_step);
  std::uint64_t x = to_u64(start_x(pr, first));
  std::uint64_t y = to_u64(start_y(pr, first));
  std::vector<u128> xp(L + 1);
  std::vector<u128> yp(L + 1);
  for (std::uint64_t j = first; j <= last; ++j) {
    xp[0] = 1;
    yp[0] = 1;
    for (unsigned e = 1; e <= L; ++e) {
      xp[e] = xp[e - 1] * x;
      yp[e] = yp[e - 1] * y;
    }
    for (unsigned a = 0; a <= L; ++a)
      for (unsigned b = 0; a + b <= L; ++b) t[moment_index(L, a, b)] += xp[a] * yp[b];
    x += nx;
    y += step;
    if (y >= m) y -= m;
  }
  std::vector<Integer> out;
  out.reserve(t.size());
  for (u128 v : t) out.push_back(from_u128(v));
  return out;
}

std::vector<Integer> moments_gmp(const MomentProblem& pr, std::uint64_t first,
                                 std::uint64_t last) {
  const unsigned L = pr.L;
  std::vector<Integer> t((L + 1) * (L + 1), 0);
  Integer x = start_x(pr, first);
  Integer y = start_y(pr, first);
  std::vector<Integer> xp(L + 1);
  std::vector<Integer> yp(L + 1);
  for (std::uint64_t j = first; j <= last; ++j) {
    xp[0] = 1;
    yp[0] = 1;
    for (unsigned e = 1; e <= L; ++e) {
      mpz_mul(xp[e].get_mpz_t(), xp[e - 1].get_mpz_t(), x.get_mpz_t());
      mpz_mul(yp[e].get_mpz_t(), yp[e - 1].get_mpz_t(), y.get_mpz_t());
    }
    for (unsigned a = 0; a <= L; ++a)
      for (unsigned b = 0; a + b <= L; ++b)
        mpz_addmul(t[moment_index(L, a, b)].get_mpz_t(), xp[a].get_mpz_t(), yp[b].get_mpz_t());
    x += pr.N;
    y += pr.y_step;
    if (y >= pr.M) y -= pr.M;
  }
  return t;
}

std::vector<Integer> moments(const MomentProblem& pr, std::uint64_t c, unsigned threads) {
  const std::size_t bits_m = mpz_sizeinbase(pr.M.get_mpz_t(), 2);
  const std::size_t bits_c = mpz_sizeinbase(Integer(static_cast<unsigned long>(c)).get_mpz_t(), 2);
  const bool native = bits_m < 63 && bits_c + pr.L * bits_m <= 127;
  auto run = [&pr, native](std::uint64_t first, std::uint64_t last) {
    return native ? moments_native(pr, first, last) : moments_gmp(pr, first, last);
  };

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinChunk = 4096;
  const std::uint64_t chunks = std::clamp<std::uint64_t>(c / kMinChunk, 1, threads);
  if (chunks == 1) return run(1, c);

  std::vector<std::future<std::vector<Integer>>> parts;
  const std::uint64_t per = c / chunks;
  for (std::uint64_t i = 0; i < chunks; ++i) {
    const std::uint64_t first = 1 + i * per;
    const std::uint64_t last = i + 1 == chunks ? c : first + per - 1;
    parts.push_back(std::async(std::launch::async, run, first, last));
  }
  std::vector<Integer> total = parts.front().get();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::vector<Integer> part = parts[i].get();
    for (std::size_t e = 0; e < total.size(); ++e) total[e] += part[e];
  }
  return total;
}

// Coefficient of x^a in b_l(x): B_{l-a} / ((l-a)! a!).
Rational bernoulli_poly_coeff(unsigned l, unsigned a) {
  const Rational b = bernoulli_number(l - a);
  if (b == 0) return b;
  return b / Rational(factorial(l - a) * factorial(a));
}

}  // namespace

QuadElem h_special_value(const TransferData& transfer, unsigned k, const Rational& p,
                         const Rational& q, const ArakawaOptions& options) {
  if (k == 0) throw DomainError("k must be positive");
  if (is_integer(p)) throw DomainError("H special value requires p not in Z");
  if (!is_integer(transfer.pprime - p) || !is_integer(transfer.qprime - q))
    throw DomainError("transfer matrix does not preserve (p, q) mod Z^2");
  const Mat2Z& V = transfer.V;
  if (V.c <= 0) throw DomainError("transfer matrix needs c > 0");
  if (V.c > Integer(static_cast<unsigned long>(options.c_cap)))
    throw ResourceError("transfer matrix entry c = " + V.c.get_str() + " exceeds the cap " +
                        std::to_string(options.c_cap) + "; use the lrr method instead");
  const std::uint64_t c = to_u64(V.c);

  const unsigned L = 2 * k + 1;
  MomentProblem pr;
  pr.L = L;
  pr.N = lcm(p.get_den(), q.get_den());
  pr.M = pr.N * V.c;
  const Rational n_frac_p = Rational(pr.N) * frac(p);
  const Rational n_rho = Rational(pr.N) * transfer.rho;
  if (!is_integer(n_frac_p) || !is_integer(n_rho))
    throw std::logic_error("Bernoulli arguments do not have denominator N c");
  pr.n_frac_p = n_frac_p.get_num();
  pr.y_step = pr.N * V.d;
  mpz_fdiv_r(pr.y_step.get_mpz_t(), pr.y_step.get_mpz_t(), pr.M.get_mpz_t());
  pr.y_offset = n_rho.get_num();
  mpz_fdiv_r(pr.y_offset.get_mpz_t(), pr.y_offset.get_mpz_t(), pr.M.get_mpz_t());

  const std::vector<Integer> t = moments(pr, c, options.threads);

  std::vector<Rational> inv_m_pow(L + 1);
  inv_m_pow[0] = 1;
  for (unsigned e = 1; e <= L; ++e) inv_m_pow[e] = inv_m_pow[e - 1] / Rational(pr.M);

  const QuadElem& beta = transfer.beta;
  const QuadElem minus_beta = -beta;
  QuadElem beta_pow = minus_beta.inverse();  // (-beta)^{l-1} at l = 0
  QuadElem total = QuadElem::rational(0, beta.radicand());
  for (unsigned l = 0; l <= L; ++l) {
    Rational s = 0;
    for (unsigned a = 0; a <= l; ++a) {
      const Rational ca = bernoulli_poly_coeff(l, a);
      if (ca == 0) continue;
      for (unsigned b = 0; b <= L - l; ++b) {
        const Rational cb = bernoulli_poly_coeff(L - l, b);
        if (cb == 0) continue;
        s += ca * cb * Rational(t[moment_index(L, a, b)]) * inv_m_pow[a + b];
      }
    }
    total += beta_pow * s;
    beta_pow *= minus_beta;
  }

  const Rational sign = k % 2 == 0 ? 1 : -1;
  const Rational prefactor = sign * Rational(pow2(2 * k));
  const QuadElem denom = beta.pow(static_cast<long>(2 * k - 1)) - Rational(1);
  return total * prefactor / denom;
}

QuadElem h_special_value(const QuadElem& alpha, unsigned k, const Rational& p, const Rational& q,
                         const ArakawaOptions& options) {
  if (k == 0) throw DomainError("k must be positive");
  const TransferData transfer = find_transfer_matrix(alpha, p, q, options.power_multiple);
  return h_special_value(transfer, k, p, q, options);
}

SpecialValue secant_value_arakawa(const QuadElem& alpha0, unsigned k,
                                  const ArakawaOptions& options) {
  const QuadElem alpha = alpha0 * Rational(2);
  QuadElem h = h_special_value(alpha, k, Rational(1, 4), Rational(0), options);
  return {alpha0, k, h * Rational(2), Method::arakawa};
}

}  // namespace quadzeta
