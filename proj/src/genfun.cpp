#include "fmc/genfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) throw InvalidArgument(std::string(what) + " must be at least 1, got " + std::to_string(v));
}

// Partitions of n into parts <= max_part, parts in nonincreasing order.
void for_each_partition(int n, int max_part, std::vector<int>& parts,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, p, parts, visit);
    parts.pop_back();
  }
}

// Number of set partitions of [n] whose block sizes are the given parts:
// n! / (prod part! * prod multiplicity!).
BigInt set_partition_count(int n, const std::vector<int>& parts) {
  BigInt den = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) {
      den *= factorial(parts[j]);
      ++j;
    }
    den *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return factorial(n) / den;
}

std::mutex h_cache_mutex;
std::map<int, std::vector<IntPoly>> h_cache;  // d -> h_0..h_k

}  // namespace

IntPoly sigma(int k, int d) {
  if (k < 0) throw InvalidArgument("sigma: k must be nonnegative");
  require_positive(d, "dimension");
  if (k == 0) return {};
  const int top = d * k - 1;
  if (top < 1) return {};
  std::vector<BigInt> c(top + 1, BigInt(1));
  c[0] = 0;
  return IntPoly(std::move(c));
}

std::vector<IntPoly> h_sequence(int n, int d) {
  require_positive(n, "label count");
  require_positive(d, "dimension");
  std::lock_guard lock(h_cache_mutex);
  auto& h = h_cache[d];
  if (h.empty()) h = {IntPoly{}, IntPoly{1}};
  for (int m = static_cast<int>(h.size()); m <= n; ++m) {
    IntPoly hm;
    std::vector<int> parts;
    for_each_partition(m, m - 1, parts, [&](const std::vector<int>& lambda) {
      IntPoly term = sigma(static_cast<int>(lambda.size()) - 1, d);
      for (int part : lambda) {
        if (term.is_zero()) return;
        term *= h[part];
      }
      hm += term * set_partition_count(m, lambda);
    });
    h.push_back(std::move(hm));
  }
  return {h.begin(), h.begin() + n + 1};
}

IntPoly h_recurrence(int n, int d) { return h_sequence(n, d).back(); }

Egf n_series(int n_max, int d) {
  auto h = h_sequence(n_max, d);
  h[0] = IntPoly{};
  return Egf(static_cast<std::size_t>(n_max), std::move(h));
}

Egf egf_solve(int n_max, int d) {
  require_positive(n_max, "truncation order");
  require_positive(d, "dimension");
  const std::size_t order = static_cast<std::size_t>(n_max);
  const Binomials binom(order);
  const IntPoly xd = IntPoly::monomial(1, d);
  const IntPoly xd1 = IntPoly::monomial(1, d + 1);
  const IntPoly pivot = xd - xd1;  // x^d (1 - x)

  // Right-hand side (1-x) x^d t + (1 - x^{d+1}) by order.
  std::vector<IntPoly> rhs(order + 1);
  rhs[0] = IntPoly{1} - xd1;
  rhs[1] = pivot;

  std::vector<IntPoly> h(order + 1);   // N
  std::vector<IntPoly> e1(order + 1);  // exp(x^d N)
  std::vector<IntPoly> e2(order + 1);  // exp(N)
  e1[0] = e2[0] = IntPoly{1};

  for (std::size_t n = 1; n <= order; ++n) {
    // Contributions of h_1..h_{n-1}; the k = n terms are x^d h_n and h_n.
    IntPoly known1, known2;
    for (std::size_t k = 1; k < n; ++k) {
      const BigInt& c = binom(n - 1, k - 1);
      known1 += poly_mul(h[k], e1[n - k]) * c;
      known2 += poly_mul(h[k], e2[n - k]) * c;
    }
    known1 *= xd;
    // x^d h_n + known1 - x^{d+1} (h_n + known2) = rhs_n
    const IntPoly residual = rhs[n] - known1 + poly_mul(xd1, known2);
    try {
      h[n] = divide_exact(residual, pivot);
    } catch (const InexactDivision&) {
      throw InexactDivision("egf_solve: order " + std::to_string(n) + " does not divide by x^" +
                            std::to_string(d) + "(1-x)");
    }
    e1[n] = known1 + poly_mul(xd, h[n]);
    e2[n] = known2 + h[n];
  }
  return Egf(order, std::move(h));
}

Egf verify_identity(const Egf& n_series, int d) {
  require_positive(d, "dimension");
  if (!n_series[0].is_zero()) throw InvalidArgument("verify_identity: series has a nonzero constant term");
  const std::size_t order = n_series.order();
  const IntPoly xd = IntPoly::monomial(1, d);
  const IntPoly xd1 = IntPoly::monomial(1, d + 1);

  Egf residual = egf_exp(xd * n_series) - xd1 * egf_exp(n_series);
  std::vector<IntPoly> rc(order + 1);
  rc[0] = IntPoly{1} - xd1;
  if (order >= 1) rc[1] = xd - xd1;
  residual -= Egf(order, std::move(rc));
  return residual;
}

MultiplicityTable::MultiplicityTable(int n, int d, std::vector<IntPoly> by_components)
    : n_(n), d_(d), rows_(std::move(by_components)) {
  if (static_cast<int>(rows_.size()) != n_) throw InvalidArgument("MultiplicityTable: need one row per m = 1..n");
}

const IntPoly& MultiplicityTable::row(int m) const {
  if (m < 1 || m > n_) throw InvalidArgument("MultiplicityTable: component count out of range");
  return rows_[m - 1];
}

BigInt MultiplicityTable::at(int m, int i) const { return i < 0 ? BigInt(0) : row(m).coeff(i); }

int MultiplicityTable::max_shift() const {
  int s = -1;
  for (const auto& r : rows_) s = std::max(s, r.degree());
  return s;
}

BigInt MultiplicityTable::total() const {
  BigInt t = 0;
  for (const auto& r : rows_) t += r.coeff_sum();
  return t;
}

MultiplicityTable multiplicity_table(int n, int d) {
  require_positive(n, "label count");
  require_positive(d, "dimension");
  const Egf series = n_series(n, d);
  std::vector<IntPoly> rows;
  rows.reserve(n);
  Egf power = Egf::one(n);
  for (int m = 1; m <= n; ++m) {
    power = egf_mul(power, series);
    try {
      rows.push_back(divide_exact(power[n], factorial(m)));
    } catch (const InexactDivision&) {
      throw InexactDivision("multiplicity_table: [t^n/n!] N^" + std::to_string(m) + " not divisible by " +
                            std::to_string(m) + "!");
    }
  }
  return MultiplicityTable(n, d, std::move(rows));
}

}  // namespace fmc
