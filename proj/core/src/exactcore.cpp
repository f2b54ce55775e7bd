#include "dualbasis/exactcore.hpp"

#include <stdexcept>

namespace dualbasis {

std::vector<Rational> bernoulli_numbers(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = Rational(1);
  for (unsigned m = 1; m <= n; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / Rational(static_cast<std::int64_t>(m) + 1);
  }
  return b;
}

Rational bernoulli_number(unsigned n) { return bernoulli_numbers(n).back(); }

Rational euler_number(unsigned n) {
  if (n % 2 != 0) throw std::domain_error("euler number defined here only for even index");
  // sech t * cosh t = 1  =>  sum_{k even <= m} C(m,k) E_k = 0 for even m > 0.
  std::vector<Rational> e(n + 1);
  e[0] = Rational(1);
  for (unsigned m = 2; m <= n; m += 2) {
    Rational acc(0);
    for (unsigned k = 0; k < m; k += 2) acc += Rational(binomial(m, k)) * e[k];
    e[m] = -acc;
  }
  return e[n];
}

Polynomial bernoulli_poly(unsigned n) {
  auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[n - k] = Rational(binomial(n, k)) * b[k];
  return Polynomial(std::move(c));
}

Polynomial hermite_poly(unsigned n) {
  Polynomial prev = Polynomial::constant(Rational(1));
  if (n == 0) return prev;
  const Polynomial two_x = Polynomial::monomial(1, Rational(2));
  Polynomial cur = two_x;
  for (unsigned k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev * Rational(2 * static_cast<std::int64_t>(k));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FormalSeries bernoulli_egf(std::size_t order) {
  // (e^t - 1)/t = sum t^n / (n+1)!
  std::vector<Rational> c(order + 1);
  BigInt fact = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    fact *= n + 1;
    c[n] = Rational(BigInt(1), fact);
  }
  FormalSeries denom = FormalSeries::from_scalars(order, c);
  return FormalSeries::exp_of(order, Polynomial::x()) * denom.reciprocal();
}

}  // namespace dualbasis
