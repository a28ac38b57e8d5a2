#pragma once

// Multiplicity polynomials h_n(x) and the multiplicity table a_{m,i}.
//
// h_n(x) sums x^{||mu||} over single-component nests of [n]. Its exponential
// generating function N(x,t) satisfies
//   (1-x) x^d t + (1 - x^{d+1}) = exp(x^d N) - x^{d+1} exp(N),
// and a_{m,i} = [x^i t^n/n!] N^m / m!.

#include <vector>

#include "fmc/polyseries.hpp"

namespace fmc {

/// sigma_0 = 0; sigma_k = x + x^2 + ... + x^{dk-1} for k > 0.
IntPoly sigma(int k, int d);

/// h_0..h_n (h_0 = 0) by the set-partition recurrence grouped into integer
/// partitions. Results are cached per d; the cache is safe to share across
/// threads.
std::vector<IntPoly> h_sequence(int n, int d);

/// h_n via the recurrence.
IntPoly h_recurrence(int n, int d);

/// N(x,t) truncated at t^{n_max}, solved order by order from the functional
/// identity. Throws InexactDivision if an order fails to divide by x^d (1-x).
Egf egf_solve(int n_max, int d);

/// N(x,t) assembled from h_sequence.
Egf n_series(int n_max, int d);

/// exp(x^d N) - x^{d+1} exp(N) - (1-x) x^d t - (1 - x^{d+1}).
Egf verify_identity(const Egf& n_series, int d);

class MultiplicityTable {
 public:
  MultiplicityTable(int n, int d, std::vector<IntPoly> by_components);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  /// sum_i a_{m,i} x^i for 1 <= m <= n.
  const IntPoly& row(int m) const;
  BigInt at(int m, int i) const;
  /// Largest shift with a nonzero entry in any row.
  int max_shift() const;
  BigInt total() const;

 private:
  int n_;
  int d_;
  std::vector<IntPoly> rows_;  // index m - 1
};

MultiplicityTable multiplicity_table(int n, int d);

}  // namespace fmc
