#pragma once

#include <cstddef>
#include <vector>

#include "dualbasis/formal_series.hpp"
#include "dualbasis/polynomial.hpp"
#include "dualbasis/rational.hpp"

namespace dualbasis {

/// B_0..B_n with the B_n(0) convention (B_1 = -1/2), from
/// sum_{k=0}^{n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_numbers(unsigned n);
Rational bernoulli_number(unsigned n);

/// Euler (secant) numbers E_n, n even: E_0 = 1, E_2 = -1, E_4 = 5, ...
/// Throws std::domain_error for odd n.
Rational euler_number(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Polynomial bernoulli_poly(unsigned n);

/// Physicists' Hermite polynomial, H_2 = 4x^2 - 2.
Polynomial hermite_poly(unsigned n);

/// t e^{xt} / (e^t - 1) through t^order, built by exact series division.
FormalSeries bernoulli_egf(std::size_t order);

}  // namespace dualbasis
