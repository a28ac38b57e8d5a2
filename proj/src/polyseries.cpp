#include "fmc/polyseries.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fmc/errors.hpp"

namespace fmc {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : BigInt(0); }

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

BigInt IntPoly::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

BigInt IntPoly::coeff_sum() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool IntPoly::is_palindromic(int deg) const {
  if (degree() != deg) return false;
  for (int e = 0; e <= deg; ++e) {
    if (coeffs_[e] != coeffs_[deg - e]) return false;
  }
  return true;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = poly_mul(*this, rhs); }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) { return poly_mul(lhs, rhs); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(out));
}

IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw InvalidArgument("divide_exact: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw InexactDivision("divide_exact: numerator degree below divisor degree");

  std::vector<BigInt> rem = num.coeffs();
  const auto& dc = den.coeffs();
  const std::size_t dd = dc.size() - 1;
  const BigInt& lead = dc.back();
  std::vector<BigInt> quot(rem.size() - dd);

  for (std::size_t qi = quot.size(); qi-- > 0;) {
    const BigInt& top = rem[qi + dd];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) throw InexactDivision("divide_exact: non-integral quotient coefficient");
    for (std::size_t j = 0; j <= dd; ++j) rem[qi + j] -= q * dc[j];
    quot[qi] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw InexactDivision("divide_exact: nonzero remainder");
  }
  return IntPoly(std::move(quot));
}

IntPoly divide_exact(const IntPoly& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("divide_exact: division by zero");
  std::vector<BigInt> out;
  out.reserve(num.coeffs().size());
  for (const auto& c : num.coeffs()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(c, den, q, r);
    if (r != 0) throw InexactDivision("divide_exact: coefficient " + c.str() + " not divisible by " + den.str());
    out.push_back(std::move(q));
  }
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    BigInt mag = c[e] < 0 ? BigInt(-c[e]) : c[e];
    if (first) {
      if (c[e] < 0) os << '-';
    } else {
      os << (c[e] < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

Binomials::Binomials(std::size_t max_n) {
  rows_.resize(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = rows_[n][n] = 1;
    for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const BigInt& Binomials::operator()(std::size_t n, std::size_t k) const {
  static const BigInt zero = 0;
  if (k > n) return zero;
  return rows_.at(n)[k];
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Egf::Egf(std::size_t order) : coeffs_(order + 1) {}

Egf::Egf(std::size_t order, std::vector<IntPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) {
    throw InvalidArgument("Egf: expected " + std::to_string(order + 1) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
}

Egf Egf::one(std::size_t order) {
  Egf e(order);
  e.coeffs_[0] = IntPoly{1};
  return e;
}

Egf Egf::t(std::size_t order) {
  Egf e(order);
  if (order >= 1) e.coeffs_[1] = IntPoly{1};
  return e;
}

bool Egf::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const IntPoly& p) { return p.is_zero(); });
}

void Egf::check_order(const Egf& other) const {
  if (order() != other.order()) {
    throw InvalidArgument("Egf: truncation order mismatch (" + std::to_string(order()) + " vs " +
                          std::to_string(other.order()) + ")");
  }
}

Egf& Egf::operator+=(const Egf& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Egf& Egf::operator-=(const Egf& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Egf& Egf::operator*=(const IntPoly& q) {
  for (auto& c : coeffs_) c = poly_mul(c, q);
  return *this;
}

Egf egf_mul(const Egf& a, const Egf& b) {
  if (a.order() != b.order()) {
    throw InvalidArgument("egf_mul: truncation order mismatch (" + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()) + ")");
  }
  const std::size_t order = a.order();
  const Binomials binom(order);
  std::vector<IntPoly> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      out[n] += poly_mul(a[k], b[n - k]) * binom(n, k);
    }
  }
  return Egf(order, std::move(out));
}

Egf egf_exp(const Egf& a) {
  if (!a[0].is_zero()) throw InvalidArgument("egf_exp: argument has a nonzero constant term");
  const std::size_t order = a.order();
  const Binomials binom(order);
  std::vector<IntPoly> e(order + 1);
  e[0] = IntPoly{1};
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero() || e[n - k].is_zero()) continue;
      e[n] += poly_mul(a[k], e[n - k]) * binom(n - 1, k - 1);
    }
  }
  return Egf(order, std::move(e));
}

Egf egf_pow(const Egf& a, unsigned m) {
  Egf r = Egf::one(a.order());
  for (unsigned i = 0; i < m; ++i) r = egf_mul(r, a);
  return r;
}

}  // namespace fmc
