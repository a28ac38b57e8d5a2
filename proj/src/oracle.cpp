#include "fmc/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"

namespace fmc {

namespace {

std::string params(int n, int d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }
std::string params(int d) { return "d=" + std::to_string(d); }

std::string render(const std::map<int, IntPoly>& rows) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    os << (first ? "" : ", ") << it->first << ": " << to_string(it->second);
    first = false;
  }
  os << '}';
  return os.str();
}

std::string render(const std::vector<DecompositionTerm>& terms) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    os << (i ? "," : "") << '(' << terms[i].m << ',' << terms[i].shift << ',' << terms[i].mult << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult brute_equiv(int n, int d, const EnumerationBudget& budget) {
  CheckResult r{"brute_equiv", params(n, d), false, {}};
  const auto brute = brute_bivariate(n, d, budget);
  const auto table = multiplicity_table(n, d);
  std::map<int, IntPoly> gf;
  for (int m = 1; m <= n; ++m) gf[m] = table.row(m);
  r.pass = brute == gf;
  r.detail = r.pass ? render(brute) : "nests " + render(brute) + " vs egf " + render(gf);
  return r;
}

CheckResult three_way_check(int n, int d, const EnumerationBudget& budget) {
  CheckResult r{"three_way", params(n, d), false, {}};
  const IntPoly rec = h_recurrence(n, d);
  const IntPoly solved = egf_solve(n, d)[n];
  const IntPoly brute = brute_bivariate(n, d, budget).at(1);
  r.pass = rec == solved && rec == brute;
  r.detail = r.pass ? "h_n = " + to_string(rec)
                    : "recurrence " + to_string(rec) + ", solver " + to_string(solved) + ", nests " + to_string(brute);
  return r;
}

CheckResult identity_check(int order, int d) {
  CheckResult r{"identity_residual", "order=" + std::to_string(order) + " d=" + std::to_string(d), false, {}};
  const Egf residual = verify_identity(n_series(order, d), d);
  r.pass = residual.is_zero();
  if (r.pass) {
    r.detail = "zero through t^" + std::to_string(order);
  } else {
    for (std::size_t i = 0; i <= residual.order(); ++i) {
      if (!residual[i].is_zero()) {
        r.detail = "first nonzero at t^" + std::to_string(i) + ": " + to_string(residual[i]);
        break;
      }
    }
  }
  return r;
}

std::vector<DecompositionTerm> blowup_schema(const std::vector<DecompositionTerm>& base,
                                             const std::vector<DecompositionTerm>& center, int r) {
  if (r < 1) throw InvalidArgument("blowup codimension must be at least 1");
  std::vector<DecompositionTerm> out = base;
  for (int j = 1; j <= r - 1; ++j) {
    for (const auto& t : center) out.push_back({t.m, t.shift + j, t.mult});
  }
  canonicalize(out);
  return out;
}

FormalDecomposition x3_oracle(int d) {
  if (d < 2) throw InvalidArgument("x3_oracle needs d >= 2");
  const std::vector<DecompositionTerm> x3{{3, 0, 1}};
  const std::vector<DecompositionTerm> x1{{1, 0, 1}};
  // Small diagonal: center X, codimension 2d.
  auto terms = blowup_schema(x3, x1, 2 * d);
  // Three disjoint centers, each isomorphic to X[2], codimension d.
  const auto x2 = decompose_formal(2, d).terms;
  for (int c = 0; c < 3; ++c) terms = blowup_schema(terms, x2, d);
  return {3, d, std::move(terms)};
}

CheckResult x3_check(int d) {
  CheckResult r{"x3_blowup", params(d), false, {}};
  const auto oracle = x3_oracle(d);
  const auto nests = decompose_formal(3, d);
  r.pass = oracle == nests;
  r.detail = r.pass ? render(oracle.terms) : "blowups " + render(oracle.terms) + " vs nests " + render(nests.terms);
  return r;
}

namespace {

GradedTable symbolic_table(Theory t, int power, int top_p, int top_k) {
  GradedTable table(t);
  auto put = [&](Index idx) { table.set(idx, GroupDescriptor::formal(group_symbol(t, idx, power))); };
  switch (t) {
    case Theory::lawson:
      for (int k = 0; k <= top_k; ++k) {
        for (int p = 0; 2 * p <= k; ++p) put({p, k});
      }
      break;
    case Theory::chow:
      for (int p = 0; p <= top_p; ++p) put({p, 0});
      break;
    case Theory::db:
      for (int p = 0; p <= top_p; ++p) {
        for (int k = 0; k <= top_k; ++k) put({p, k});
      }
      break;
    case Theory::betti:
      for (int k = 0; k <= top_k; ++k) put({0, k});
      break;
  }
  return table;
}

std::vector<Index> index_window(Theory t, int d) {
  std::vector<Index> out;
  const int top_k = 4 * d + 2;
  switch (t) {
    case Theory::lawson:
      for (int k = 0; k <= top_k; ++k) {
        for (int p = 0; 2 * p <= k; ++p) out.push_back({p, k});
      }
      break;
    case Theory::chow:
      for (int p = 0; p <= 2 * d + 1; ++p) out.push_back({p, 0});
      break;
    case Theory::db:
      // Levels below d-1 would make the blowup read a negative level.
      for (int p = d - 1; p <= 2 * d + 1; ++p) {
        for (int k = 0; k <= top_k; ++k) out.push_back({p, k});
      }
      break;
    case Theory::betti:
      for (int k = 0; k <= top_k; ++k) out.push_back({0, k});
      break;
  }
  return out;
}

}  // namespace

CheckResult x2_blowup_check(int d) {
  CheckResult r{"x2_blowup", params(d), true, {}};
  const FormalDecomposition dec = decompose_formal(2, d);
  int compared = 0;
  for (Theory t : {Theory::lawson, Theory::chow, Theory::db, Theory::betti}) {
    SpaceDescriptor space;
    space.name = "X";
    space.dim = d;
    space.kind = t;
    GradedTable x_table(t), x2_table(t);
    if (t == Theory::betti) {
      // Rational data of P^d stands in for X; powers come from Kunneth.
      std::vector<BigInt> c(2 * d + 1);
      for (int k = 0; k <= 2 * d; k += 2) c[k] = 1;
      space.betti = IntPoly(std::move(c));
      x_table = space.power_table(1);
      x2_table = space.power_table(2);
    } else {
      x_table = symbolic_table(t, 1, 2 * d + 1, 4 * d + 2);
      x2_table = symbolic_table(t, 2, 2 * d + 1, 4 * d + 2);
      space.table = x_table;
      space.powers.emplace(2, x2_table);
    }
    for (Index idx : index_window(t, d)) {
      const auto lhs = blowup_formula(x2_table, x_table, d, idx);
      const auto rhs = evaluate_decomposition(dec, space, t, idx);
      ++compared;
      if (lhs != rhs) {
        r.pass = false;
        r.detail = std::string(theory_name(t)) + " (p=" + std::to_string(idx.p) + ",k=" + std::to_string(idx.k) +
                   "): blowup " + to_string(lhs) + " vs nests " + to_string(rhs);
        return r;
      }
    }
  }
  r.detail = std::to_string(compared) + " indices agree";
  return r;
}

CheckResult x2_formula_check(int d) {
  CheckResult r{"x2_formula", params(d), false, {}};
  std::vector<DecompositionTerm> expected{{2, 0, 1}};
  for (int j = 1; j <= d - 1; ++j) expected.push_back({1, j, 1});
  const auto got = decompose_formal(2, d).terms;
  r.pass = got == expected;
  r.detail = r.pass ? render(got) : "got " + render(got) + ", expected " + render(expected);
  return r;
}

CheckResult x3_formula_check(int d) {
  CheckResult r{"x3_formula", params(d), false, {}};
  std::vector<DecompositionTerm> expected{{3, 0, 1}};
  for (int j = 1; j <= d - 1; ++j) expected.push_back({2, j, 3});
  for (int j = 1; j <= 2 * d - 1; ++j) expected.push_back({1, j, std::min(3 * j - 2, 6 * d - 3 * j - 2)});
  const auto got = decompose_formal(3, d).terms;
  r.pass = got == expected;
  r.detail = r.pass ? render(got) : "got " + render(got) + ", expected " + render(expected);
  return r;
}

CheckResult palindrome_check(const IntPoly& betti_x, int d, int n) {
  if (d < 1) throw InvalidArgument("palindrome_check needs d >= 1");
  if (!betti_x.is_palindromic(2 * d)) {
    throw InvalidArgument("palindrome_check: input is not palindromic of degree 2d=" + std::to_string(2 * d));
  }
  CheckResult r{"palindrome", params(n, d) + " P=" + to_string(betti_x, 'q'), false, {}};
  const IntPoly out = betti_of_fm(betti_x, d, n);
  r.pass = out.is_palindromic(2 * d * n);
  r.detail = to_string(out, 'q');
  return r;
}

CheckResult structure_check(int n, int d) {
  CheckResult r{"structure", params(n, d), true, "ok"};
  auto fail = [&](std::string why) {
    r.pass = false;
    r.detail = std::move(why);
  };
  const MultiplicityTable table = multiplicity_table(n, d);
  if (table.at(n, 0) != 1) fail("a_{n,0} != 1");
  for (int m = 1; m < n && r.pass; ++m) {
    if (table.at(m, 0) != 0) fail("a_{" + std::to_string(m) + ",0} != 0");
  }
  const int top = n >= 2 ? d * (n - 1) - 1 : 0;
  for (int m = 1; m <= n && r.pass; ++m) {
    const auto& row = table.row(m);
    if (row.degree() > top) fail("row " + std::to_string(m) + " has a shift past d(n-1)-1");
    for (const auto& c : row.coeffs()) {
      if (c < 0) fail("negative multiplicity in row " + std::to_string(m));
    }
  }
  if (r.pass && n >= 2 && d >= 2 && h_recurrence(n, d).degree() != top) fail("deg h_n != d(n-1)-1");
  return r;
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.max_d < 1) throw InvalidArgument("--max-d must be at least 1");
  const EnumerationBudget budget{kDefaultNestBudget, options.budget_override};
  budget.check(options.max_n);

  VerificationReport report;
  auto& checks = report.checks;
  for (int d = 1; d <= options.max_d; ++d) {
    for (int n = 1; n <= options.max_n; ++n) {
      checks.push_back(brute_equiv(n, d, budget));
      checks.push_back(three_way_check(n, d, budget));
      checks.push_back(structure_check(n, d));
    }
  }
  for (int d = 1; d <= options.max_d; ++d) checks.push_back(identity_check(std::max(options.max_n, 8), d));
  for (int d = 1; d <= options.max_d; ++d) {
    checks.push_back(x2_formula_check(d));
    checks.push_back(x2_blowup_check(d));
  }
  for (int d = 2; d <= options.max_d; ++d) {
    checks.push_back(x3_formula_check(d));
    checks.push_back(x3_check(d));
  }
  for (int d = 1; d <= options.max_d; ++d) {
    std::vector<BigInt> c(2 * d + 1);
    for (int k = 0; k <= 2 * d; k += 2) c[k] = 1;
    const IntPoly projective(std::move(c));
    for (int n = 1; n <= options.max_n; ++n) checks.push_back(palindrome_check(projective, d, n));
  }
  return report;
}

}  // namespace fmc
