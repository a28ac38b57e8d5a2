#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <thread>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"
#include "fmc/nests.hpp"

using namespace fmc;

namespace {

// Oracle: h_n summed over genuine set partitions of [n], no grouping by shape.
std::vector<IntPoly> h_by_set_partitions(int n_max, int d) {
  std::vector<IntPoly> h(n_max + 1);
  h[1] = IntPoly{1};
  for (int n = 2; n <= n_max; ++n) {
    IntPoly total;
    std::vector<int> block_of(n, -1);
    std::function<void(int, int)> assign = [&](int i, int blocks) {
      if (i == n) {
        std::vector<int> sizes(blocks, 0);
        for (int b : block_of) ++sizes[b];
        IntPoly term = sigma(blocks - 1, d);
        for (int s : sizes) term *= h[s];
        total += term;
        return;
      }
      for (int b = 0; b <= blocks; ++b) {
        block_of[i] = b;
        assign(i + 1, std::max(blocks, b + 1));
      }
    };
    assign(0, 0);
    h[n] = total;
  }
  return h;
}

}  // namespace

TEST_CASE("sigma examples") {
  CHECK(sigma(0, 3).is_zero());
  CHECK(sigma(1, 2) == IntPoly{0, 1});
  CHECK(sigma(1, 1).is_zero());
  CHECK(sigma(2, 2) == IntPoly{0, 1, 1, 1});
  CHECK_THROWS_AS(sigma(-1, 2), InvalidArgument);
  CHECK_THROWS_AS(sigma(1, 0), InvalidArgument);
}

TEST_CASE("sigma is palindromic around dk") {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= 5; ++k) {
      const IntPoly s = sigma(k, d);
      for (int i = 0; i <= d * k; ++i) CHECK(s.coeff(i) == s.coeff(d * k - i));
    }
  }
}

TEST_CASE("h_recurrence examples") {
  CHECK(h_recurrence(1, 5) == IntPoly{1});
  for (int d = 1; d <= 5; ++d) CHECK(h_recurrence(2, d) == sigma(1, d));
  CHECK(h_recurrence(3, 2) == IntPoly{0, 1, 4, 1});
  CHECK_THROWS_AS(h_recurrence(0, 2), InvalidArgument);
}

TEST_CASE("h_recurrence against the set-partition oracle") {
  for (int d = 1; d <= 4; ++d) {
    const auto oracle = h_by_set_partitions(7, d);
    const auto h = h_sequence(7, d);
    for (int n = 1; n <= 7; ++n) CHECK(h[n] == oracle[n]);
  }
}

TEST_CASE("egf_solve examples") {
  for (int d = 1; d <= 5; ++d) {
    const Egf n = egf_solve(4, d);
    CHECK(n[0].is_zero());
    CHECK(n[1] == IntPoly{1});
    CHECK(n[2] == sigma(1, d));
  }
  CHECK(egf_solve(2, 1)[2].is_zero());
  CHECK_THROWS_AS(egf_solve(0, 2), InvalidArgument);
}

TEST_CASE("verify_identity examples") {
  for (int d = 1; d <= 3; ++d) {
    for (int order = 1; order <= 6; ++order) CHECK(verify_identity(n_series(order, d), d).is_zero());
  }

  std::vector<IntPoly> h = n_series(5, 2).coeffs();
  h[2] += IntPoly{1};
  const Egf bumped = verify_identity(Egf(5, h), 2);
  CHECK(bumped[0].is_zero());
  CHECK(bumped[1].is_zero());
  CHECK_FALSE(bumped[2].is_zero());

  const Egf zero = verify_identity(Egf(4), 2);
  CHECK(zero[0].is_zero());
  CHECK(zero[1] == -(IntPoly{0, 0, 1, -1}));

  CHECK_THROWS_AS(verify_identity(Egf::one(3), 2), InvalidArgument);
}

TEST_CASE("three-way agreement n <= 5, d <= 3") {
  for (int d = 1; d <= 3; ++d) {
    const Egf solved = egf_solve(5, d);
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(n);
      CAPTURE(d);
      const IntPoly rec = h_recurrence(n, d);
      CHECK(rec == solved[n]);
      CHECK(rec == brute_bivariate(n, d).at(1));
      const auto table = multiplicity_table(n, d);
      const auto brute = brute_bivariate(n, d);
      for (int m = 1; m <= n; ++m) CHECK(table.row(m) == brute.at(m));
    }
  }
}

TEST_CASE("multiplicity_table examples") {
  const auto t = multiplicity_table(3, 2);
  CHECK(t.at(3, 0) == 1);
  CHECK(t.at(2, 1) == 3);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(1, 2) == 4);
  CHECK(t.at(1, 3) == 1);
  CHECK(t.total() == 10);
  CHECK(t.max_shift() == 3);

  for (int d = 1; d <= 5; ++d) {
    const auto two = multiplicity_table(2, d);
    CHECK(two.row(2) == IntPoly{1});
    CHECK(two.row(1) == sigma(1, d));
  }
  CHECK(multiplicity_table(1, 3).row(1) == IntPoly{1});
}

TEST_CASE("total term count equals the number of pairs (S, mu)") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      BigInt pairs = 0;
      for (const auto& s : enumerate_nests(n)) {
        BigInt prod = 1;
        for (const auto& [node, sons] : nest_stats(s).sons) prod *= std::max(d * (sons - 1) - 1, 0);
        pairs += prod;
      }
      CHECK(multiplicity_table(n, d).total() == pairs);
    }
  }
}

TEST_CASE("upper-index convention gives the same table") {
  // mu_I -> d(c_I - 1) - mu_I sends ||mu|| to d(n - c(S)) - ||mu||.
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto table = multiplicity_table(n, d);
      std::map<int, IntPoly> upper;
      for (const auto& s : enumerate_nests(n)) {
        const int m = nest_stats(s).components;
        const IntPoly w = nest_weight(s, d);
        const int top = d * (n - m);
        std::vector<BigInt> flipped(top + 1);
        for (int i = 0; i <= w.degree(); ++i) flipped[top - i] = w.coeffs()[i];
        upper[m] += IntPoly(std::move(flipped));
      }
      for (int m = 1; m <= n; ++m) CHECK(upper[m] == table.row(m));
    }
  }
}

TEST_CASE("structural invariants n <= 6, d <= 4") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      const auto t = multiplicity_table(n, d);
      CHECK(t.at(n, 0) == 1);
      for (int m = 1; m < n; ++m) CHECK(t.at(m, 0) == 0);
      for (int m = 1; m <= n; ++m) {
        for (const auto& c : t.row(m).coeffs()) CHECK(c >= 0);
      }
      if (n >= 2) CHECK(t.max_shift() <= d * (n - 1) - 1);
      if (n >= 2 && d >= 2) {
        CHECK(h_recurrence(n, d).degree() == d * (n - 1) - 1);
      }
      if (d >= 2) CHECK_FALSE(h_recurrence(n, d).is_zero());
    }
  }
}

TEST_CASE("large coefficients stay exact") {
  const IntPoly h = h_recurrence(14, 4);
  BigInt biggest = 0;
  for (const auto& c : h.coeffs()) biggest = std::max(biggest, c);
  CHECK(biggest > BigInt(std::numeric_limits<long long>::max()));
  CHECK(egf_solve(14, 4)[14] == h);
}

TEST_CASE("h cache is safe to share across threads") {
  std::vector<std::vector<IntPoly>> results(8);
  std::vector<std::thread> workers;
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&results, i] { results[i] = h_sequence(6 + i % 3, 5); });
  }
  for (auto& w : workers) w.join();
  const auto reference = h_by_set_partitions(8, 5);
  for (int i = 0; i < 8; ++i) {
    for (std::size_t n = 1; n < results[i].size(); ++n) CHECK(results[i][n] == reference[n]);
  }
}
