#pragma once

// Exact integer polynomials in x and truncated exponential generating
// functions in t whose coefficients are such polynomials.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fmc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[e] is the coefficient of x^e. Trailing zeros are always stripped,
/// so the zero polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t exponent);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^e, zero past the degree.
  BigInt coeff(std::size_t e) const;

  /// Multiply by x^k.
  IntPoly shifted(std::size_t k) const;
  BigInt evaluate(const BigInt& at) const;
  /// Sum of all coefficients (value at x = 1).
  BigInt coeff_sum() const;
  /// True iff coeff(e) == coeff(deg - e) for all e and the degree is exactly deg.
  bool is_palindromic(int deg) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend IntPoly operator*(const BigInt& lhs, IntPoly rhs) { return rhs *= lhs; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Quotient of an exact division by a nonzero polynomial. Throws
/// InexactDivision if the remainder is nonzero or a quotient coefficient is
/// not integral.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den);
IntPoly divide_exact(const IntPoly& num, const BigInt& den);

/// Human-readable form, e.g. "x + 4x^2 + x^3".
std::string to_string(const IntPoly& p, char var = 'x');

/// Pascal triangle rows 0..max_n, built once per truncation order.
class Binomials {
 public:
  explicit Binomials(std::size_t max_n);
  const BigInt& operator()(std::size_t n, std::size_t k) const;
  std::size_t max_n() const noexcept { return rows_.size() - 1; }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt factorial(unsigned n);

/// Truncated exponential generating function sum_{i=0}^{order} h_i t^i / i!
/// with IntPoly coefficients. The truncation order is fixed at construction
/// and arithmetic between different orders is rejected.
class Egf {
 public:
  /// Zero series of the given order.
  explicit Egf(std::size_t order);
  /// coeffs.size() must be order + 1.
  Egf(std::size_t order, std::vector<IntPoly> coeffs);

  /// The series 1.
  static Egf one(std::size_t order);
  /// The series t (h_1 = 1).
  static Egf t(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const IntPoly& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<IntPoly>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  Egf& operator+=(const Egf& rhs);
  Egf& operator-=(const Egf& rhs);
  /// Coefficientwise multiplication by a polynomial in x.
  Egf& operator*=(const IntPoly& q);

  friend Egf operator+(Egf lhs, const Egf& rhs) { return lhs += rhs; }
  friend Egf operator-(Egf lhs, const Egf& rhs) { return lhs -= rhs; }
  friend Egf operator*(const IntPoly& q, Egf rhs) { return rhs *= q; }
  friend Egf operator*(Egf lhs, const IntPoly& q) { return lhs *= q; }

  friend bool operator==(const Egf&, const Egf&) = default;

 private:
  void check_order(const Egf& other) const;

  std::vector<IntPoly> coeffs_;
};

/// Binomial convolution: c_n = sum_k C(n,k) a_k b_{n-k}.
Egf egf_mul(const Egf& a, const Egf& b);

/// exp(a) for a series with zero constant term.
/// e_0 = 1, e_n = sum_{k=1}^{n} C(n-1,k-1) a_k e_{n-k}.
Egf egf_exp(const Egf& a);

/// a^m by repeated binomial convolution; a^0 is the unit series.
Egf egf_pow(const Egf& a, unsigned m);

}  // namespace fmc
