#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dualbasis/rational.hpp"

namespace dualbasis::ladder {

enum class BasisTag { bernoulli, hermite_poly, hermite_fn };

std::string_view to_string(BasisTag t);

/// Square operator matrix on the degree block 0..D of a polynomial basis.
/// Column n holds the coordinates of the image of basis element n.
template <class T>
class OperatorMatrix {
 public:
  OperatorMatrix(BasisTag tag, std::size_t dim) : tag_(tag), dim_(dim), entries_(dim * dim, T(0)) {}

  static OperatorMatrix identity(BasisTag tag, std::size_t dim) {
    OperatorMatrix m(tag, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  BasisTag tag() const { return tag_; }
  std::size_t dim() const { return dim_; }

  T& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != dim_) throw std::invalid_argument("operator/vector dimension mismatch");
    std::vector<T> out(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  /// Leading block on degrees 0..degree.
  OperatorMatrix block(std::size_t degree) const {
    if (degree >= dim_) throw std::invalid_argument("block degree outside the matrix");
    OperatorMatrix out(tag_, degree + 1);
    for (std::size_t i = 0; i <= degree; ++i)
      for (std::size_t j = 0; j <= degree; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  OperatorMatrix& operator+=(const OperatorMatrix& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
  }
  OperatorMatrix& operator-=(const OperatorMatrix& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
  }
  OperatorMatrix& operator*=(const T& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(OperatorMatrix a, const T& c) { return a *= c; }

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    a.check_compatible(b);
    OperatorMatrix out(a.tag_, a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

  void check_compatible(const OperatorMatrix& other) const {
    if (tag_ != other.tag_) throw std::invalid_argument("operator basis tags differ");
    if (dim_ != other.dim_) throw std::invalid_argument("operator dimensions differ");
  }

 private:
  BasisTag tag_;
  std::size_t dim_;
  std::vector<T> entries_;
};

using ExactMatrix = OperatorMatrix<Rational>;
using RealMatrix = OperatorMatrix<double>;

/// [P, Q] = PQ - QP.
template <class T>
OperatorMatrix<T> commutator(const OperatorMatrix<T>& p, const OperatorMatrix<T>& q) {
  return p * q - q * p;
}

/// Largest |entry| of m - expected over the leading block 0..degree.
double max_block_deviation(const RealMatrix& m, const RealMatrix& expected, std::size_t degree);

// Bernoulli basis B_0..B_D.
ExactMatrix op_L(std::size_t D);  // L B_n = n B_{n-1}
ExactMatrix op_R(std::size_t D);  // R B_n = B_{n+1}, B_{D+1} dropped
ExactMatrix op_N(std::size_t D);  // N B_n = n B_n
ExactMatrix op_J(std::size_t D);  // J B_n = B_{n+1}/(n+1), so R = J (N+1)

/// Normalized ladder A B_n = sqrt(n) B_{n-1}, A^dag B_n = sqrt(n+1) B_{n+1}.
/// Built as A = L N^{-1/2} and A^dag = N^{1/2} R, with N^{-1/2} = 0 on B_0.
RealMatrix op_A(std::size_t D);
RealMatrix op_Adag(std::size_t D);

/// d/dx on the physicists' Hermite polynomials: H_n' = 2n H_{n-1}.
ExactMatrix op_hermite_derivative(std::size_t D);
/// Multiplication by x: x H_n = H_{n+1}/2 + n H_{n-1}, H_{D+1} dropped.
ExactMatrix op_hermite_x(std::size_t D);

struct HermiteLadder {
  RealMatrix a;
  RealMatrix adag;
};

/// a = (x + d/dx)/sqrt(2), a^dag = (x - d/dx)/sqrt(2) on normalized Hermite
/// functions psi_n = H_n e^{-x^2/2} / sqrt(2^n n! sqrt(pi)).
HermiteLadder hermite_ladder(std::size_t D);

struct CoherentStateResult {
  Rational max_defect;        // max |(L - y)|y>| over degrees 0..T-1
  Rational top_degree_defect; // the truncation-injured coefficient at degree T
  bool generating_function_matches = false;  // e^{tR} B_0 vs bernoulli_egf(T)
};

/// |y> = sum_{n<=T} y^n R^n B_0 / n! in Bernoulli coordinates; T >= 2.
CoherentStateResult coherent_state_check(std::size_t T, const Rational& y);

/// e^{tR} B_0 through t^T, coefficient n as a polynomial in x, compared
/// exactly with bernoulli_egf(T). Valid for any T >= 0.
bool generating_function_check(std::size_t T);

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s);

struct LadderCheck {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;
};

/// Every ladder identity at block dimension D and series order T.
std::vector<LadderCheck> verify_ladder(std::size_t D, std::size_t T);

}  // namespace dualbasis::ladder
