#include "dualbasis/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dualbasis/exactcore.hpp"

namespace dualbasis::ladder {
namespace {

constexpr double kRealTolerance = 1e-12;

void check_dim(std::size_t D) {
  if (D < 1) throw std::domain_error("ladder truncation needs D >= 1");
}

Rational rat(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

RealMatrix to_real(const ExactMatrix& m, BasisTag tag) {
  RealMatrix out(tag, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

RealMatrix diagonal(BasisTag tag, std::size_t dim, double (*f)(std::size_t)) {
  RealMatrix m(tag, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = f(i);
  return m;
}

ExactMatrix make_R(std::size_t D) {
  ExactMatrix m(BasisTag::bernoulli, D + 1);
  for (std::size_t n = 0; n < D; ++n) m(n + 1, n) = Rational(1);
  return m;
}

// psi_j / psi_i normalisation ratio c_j / c_i = sqrt(2^i i! / (2^j j!)).
double hermite_norm_ratio(std::size_t i, std::size_t j) {
  Rational r = pow(Rational(2), static_cast<unsigned>(i)) * Rational(factorial(static_cast<unsigned>(i))) /
               (pow(Rational(2), static_cast<unsigned>(j)) * Rational(factorial(static_cast<unsigned>(j))));
  return std::sqrt(r.to_double());
}

RealMatrix to_hermite_functions(const ExactMatrix& m) {
  RealMatrix out(BasisTag::hermite_fn, m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).to_double() * hermite_norm_ratio(i, j);
  return out;
}

// Coordinates of R^n B_0 for n = 0..T in the block 0..T.
std::vector<std::vector<Rational>> raised_vacua(std::size_t T) {
  const ExactMatrix R = make_R(T);
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> v(T + 1);
  v[0] = Rational(1);
  for (std::size_t n = 0; n <= T; ++n) {
    out.push_back(v);
    v = R.apply(v);
  }
  return out;
}

Polynomial from_bernoulli_coordinates(std::span<const Rational> coords) {
  Polynomial p;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) p += bernoulli_poly(static_cast<unsigned>(k)) * coords[k];
  return p;
}

Polynomial from_hermite_coordinates(std::span<const Rational> coords) {
  Polynomial p;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (!coords[k].is_zero()) p += hermite_poly(static_cast<unsigned>(k)) * coords[k];
  return p;
}

std::vector<Rational> unit(std::size_t dim, std::size_t n) {
  std::vector<Rational> e(dim);
  e[n] = Rational(1);
  return e;
}

LadderCheck make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

// m - expected vanishes on the leading block 0..degree, exactly.
bool exact_block_equal(const ExactMatrix& m, const ExactMatrix& expected, std::size_t degree) {
  return m.block(degree) == expected.block(degree);
}

}  // namespace

std::string_view to_string(BasisTag t) {
  switch (t) {
    case BasisTag::bernoulli: return "bernoulli";
    case BasisTag::hermite_poly: return "hermite-poly";
    case BasisTag::hermite_fn: return "hermite-fn";
  }
  return "?";
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "?";
}

double max_block_deviation(const RealMatrix& m, const RealMatrix& expected, std::size_t degree) {
  m.check_compatible(expected);
  double worst = 0.0;
  for (std::size_t i = 0; i <= degree; ++i)
    for (std::size_t j = 0; j <= degree; ++j) worst = std::max(worst, std::abs(m(i, j) - expected(i, j)));
  return worst;
}

ExactMatrix op_L(std::size_t D) {
  check_dim(D);
  ExactMatrix m(BasisTag::bernoulli, D + 1);
  for (std::size_t n = 1; n <= D; ++n) m(n - 1, n) = rat(n);
  return m;
}

ExactMatrix op_R(std::size_t D) {
  check_dim(D);
  return make_R(D);
}

ExactMatrix op_N(std::size_t D) {
  check_dim(D);
  ExactMatrix m(BasisTag::bernoulli, D + 1);
  for (std::size_t n = 0; n <= D; ++n) m(n, n) = rat(n);
  return m;
}

ExactMatrix op_J(std::size_t D) {
  check_dim(D);
  ExactMatrix m(BasisTag::bernoulli, D + 1);
  for (std::size_t n = 0; n < D; ++n) m(n + 1, n) = Rational(1) / rat(n + 1);
  return m;
}

RealMatrix op_A(std::size_t D) {
  check_dim(D);
  const RealMatrix inv_sqrt_n = diagonal(BasisTag::bernoulli, D + 1, [](std::size_t n) {
    return n == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(n));
  });
  return to_real(op_L(D), BasisTag::bernoulli) * inv_sqrt_n;
}

RealMatrix op_Adag(std::size_t D) {
  check_dim(D);
  const RealMatrix sqrt_n = diagonal(BasisTag::bernoulli, D + 1,
                                     [](std::size_t n) { return std::sqrt(static_cast<double>(n)); });
  return sqrt_n * to_real(op_R(D), BasisTag::bernoulli);
}

ExactMatrix op_hermite_derivative(std::size_t D) {
  check_dim(D);
  ExactMatrix m(BasisTag::hermite_poly, D + 1);
  for (std::size_t n = 1; n <= D; ++n) m(n - 1, n) = rat(2 * n);
  return m;
}

ExactMatrix op_hermite_x(std::size_t D) {
  check_dim(D);
  ExactMatrix m(BasisTag::hermite_poly, D + 1);
  for (std::size_t n = 0; n <= D; ++n) {
    if (n < D) m(n + 1, n) = Rational(BigInt(1), BigInt(2));
    if (n >= 1) m(n - 1, n) = rat(n);
  }
  return m;
}

HermiteLadder hermite_ladder(std::size_t D) {
  check_dim(D);
  const ExactMatrix x = op_hermite_x(D);
  // d/dx (p e^{-x^2/2}) = (p' - x p) e^{-x^2/2}
  const ExactMatrix d = op_hermite_derivative(D) - x;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  RealMatrix a = to_hermite_functions(x + d) * inv_sqrt2;
  RealMatrix adag = to_hermite_functions(x - d) * inv_sqrt2;
  return {std::move(a), std::move(adag)};
}

bool generating_function_check(std::size_t T) {
  const FormalSeries egf = bernoulli_egf(T);
  const auto vacua = raised_vacua(T);
  for (std::size_t n = 0; n <= T; ++n) {
    Polynomial coefficient = from_bernoulli_coordinates(vacua[n]) *
                             Rational(BigInt(1), factorial(static_cast<unsigned>(n)));
    if (!(coefficient == egf[n])) return false;
  }
  return true;
}

CoherentStateResult coherent_state_check(std::size_t T, const Rational& y) {
  if (T < 2) throw std::domain_error("coherent_state_check needs series order T >= 2");
  const auto vacua = raised_vacua(T);
  std::vector<Rational> state(T + 1);
  Rational coeff(1);
  for (std::size_t n = 0; n <= T; ++n) {
    if (n > 0) coeff *= y / rat(n);
    for (std::size_t k = 0; k <= T; ++k) state[k] += coeff * vacua[n][k];
  }
  std::vector<Rational> image = op_L(T).apply(state);
  CoherentStateResult out;
  for (std::size_t k = 0; k <= T; ++k) {
    Rational defect = abs(image[k] - y * state[k]);
    if (k < T) {
      out.max_defect = std::max(out.max_defect, defect);
    } else {
      out.top_degree_defect = defect;
    }
  }
  out.generating_function_matches = generating_function_check(T);
  return out;
}

std::vector<LadderCheck> verify_ladder(std::size_t D, std::size_t T) {
  check_dim(D);
  std::vector<LadderCheck> checks;
  const std::size_t dim = D + 1;

  {
    bool ok = true;
    for (unsigned n = 1; n <= D && ok; ++n)
      ok = bernoulli_poly(n).derivative() == bernoulli_poly(n - 1) * Rational(n);
    checks.push_back(make_check("d/dx B_n = n B_{n-1}", ok, "n <= " + std::to_string(D)));
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= D && ok; ++n)
      ok = hermite_poly(n).derivative() == hermite_poly(n - 1) * Rational(2 * static_cast<std::int64_t>(n));
    checks.push_back(make_check("d/dx H_n = 2n H_{n-1}", ok, "n <= " + std::to_string(D)));
  }
  {
    const ExactMatrix L = op_L(D);
    const ExactMatrix H = op_hermite_derivative(D);
    bool ok_b = true;
    bool ok_h = true;
    for (std::size_t n = 0; n <= D; ++n) {
      const auto e = unit(dim, n);
      const auto un = static_cast<unsigned>(n);
      ok_b = ok_b && from_bernoulli_coordinates(L.apply(e)) == bernoulli_poly(un).derivative();
      ok_h = ok_h && from_hermite_coordinates(H.apply(e)) == hermite_poly(un).derivative();
    }
    checks.push_back(make_check("L matrix acts as d/dx on B_n", ok_b));
    checks.push_back(make_check("Hermite derivative matrix acts as d/dx on H_n", ok_h));
  }

  const ExactMatrix L = op_L(D);
  const ExactMatrix R = op_R(D);
  const ExactMatrix N = op_N(D);
  const ExactMatrix I = ExactMatrix::identity(BasisTag::bernoulli, dim);
  const std::string block = "degrees <= " + std::to_string(D - 1);
  {
    ExactMatrix defect = commutator(L, R) - I;
    ExactMatrix expected(BasisTag::bernoulli, dim);
    expected(D, D) = -rat(D) - Rational(1);
    std::ostringstream detail;
    detail << block << "; top-degree defect " << defect(D, D);
    checks.push_back(make_check("[L,R] = I", defect == expected, detail.str()));
  }
  checks.push_back(make_check("[N,L] = -L", exact_block_equal(commutator(N, L), L * Rational(-1), D - 1), block));
  checks.push_back(make_check("[N,R] = R", exact_block_equal(commutator(N, R), R, D - 1), block));
  // (N+1) J in that order scales B_{n+1} by (n+2)/(n+1); the factor must act first.
  checks.push_back(make_check("R = J (N+1)", op_J(D) * (N + I) == R,
                              (N + I) * op_J(D) == R ? "(N+1) J also equals R" : "(N+1) J differs from R"));

  checks.push_back(make_check("e^{tR} B_0 = t e^{xt}/(e^t-1)", generating_function_check(T),
                              "through t^" + std::to_string(T)));
  if (T < 2) {
    checks.push_back({"(L - y)|y> = 0", CheckStatus::skip, "series order below 2"});
  } else {
    const Rational y(BigInt(1), BigInt(2));
    const auto cs = coherent_state_check(T, y);
    checks.push_back(make_check("(L - y)|y> = 0", cs.max_defect.is_zero(),
                                "y = 1/2, degrees <= " + std::to_string(T - 1) + "; top-degree defect " +
                                    cs.top_degree_defect.to_string()));
  }

  {
    const RealMatrix Ir = RealMatrix::identity(BasisTag::bernoulli, dim);
    const double dev = max_block_deviation(commutator(op_A(D), op_Adag(D)), Ir, D - 1);
    std::ostringstream detail;
    detail << block << "; max deviation " << dev;
    checks.push_back(make_check("[A,A+] = I", dev <= kRealTolerance, detail.str()));
  }
  {
    const auto h = hermite_ladder(D);
    const RealMatrix Ih = RealMatrix::identity(BasisTag::hermite_fn, dim);
    const double dev = max_block_deviation(commutator(h.a, h.adag), Ih, D - 1);
    std::ostringstream detail;
    detail << block << "; max deviation " << dev;
    checks.push_back(make_check("[a,a+] = I", dev <= kRealTolerance, detail.str()));
  }
  return checks;
}

}  // namespace dualbasis::ladder
