#include "quadzeta/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace quadzeta {
namespace {

// Grow-only table. Readers take a shared lock; growth takes the unique lock
// and extends the table by the recurrence.
template <typename T, typename Extend>
class GrowingTable {
 public:
  explicit GrowingTable(Extend extend) : extend_(extend) {}

  T get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (table_.size() <= n) table_.push_back(extend_(table_));
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<T> table_;
  Extend extend_;
};

// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
Rational next_bernoulli(const std::vector<Rational>& b) {
  const auto n = static_cast<unsigned>(b.size());
  if (n == 0) return Rational(1);
  if (n >= 3 && n % 2 == 1) return Rational(0);
  Rational acc = 0;
  for (unsigned j = 0; j < n; ++j) {
    if (b[j] == 0) continue;
    acc += Rational(binomial(n + 1, j)) * b[j];
  }
  Rational bn = -acc / Rational(n + 1);
  return bn;
}

// cosh * sech = 1 gives sum_{j even} C(n, j) E_{n-j} = [n == 0].
Integer next_euler(const std::vector<Integer>& e) {
  const auto n = static_cast<unsigned>(e.size());
  if (n == 0) return Integer(1);
  if (n % 2 == 1) return Integer(0);
  Integer acc = 0;
  for (unsigned j = 2; j <= n; j += 2) acc += binomial(n, j) * e[n - j];
  return -acc;
}

auto& bernoulli_table() {
  static GrowingTable<Rational, decltype(&next_bernoulli)> table(&next_bernoulli);
  return table;
}

auto& euler_table() {
  static GrowingTable<Integer, decltype(&next_euler)> table(&next_euler);
  return table;
}

}  // namespace

Rational bernoulli_number(unsigned n) { return bernoulli_table().get(n); }

Integer euler_number(unsigned n) { return euler_table().get(n); }

Rational bernoulli_poly(unsigned l, const Rational& x) {
  // Horner in x over the coefficients B_i / (i! (l-i)!), highest power first.
  Rational acc = 0;
  for (unsigned i = 0; i <= l; ++i) {
    const Rational b = bernoulli_number(i);
    Rational coeff = 0;
    if (b != 0) coeff = b / Rational(factorial(i) * factorial(l - i));
    acc = acc * x + coeff;
  }
  return acc;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace quadzeta
