#pragma once

// Independent cross-checks of the multiplicity computations: exhaustive nest
// enumeration against the generating functions, and explicit blowup
// constructions of X[2] and X[3] against the nest decomposition.

#include <string>
#include <vector>

#include "fmc/nests.hpp"
#include "fmc/theory.hpp"

namespace fmc {

struct CheckResult {
  std::string name;
  std::string parameters;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool overall() const;
};

/// brute_bivariate(n, d) against the rows of multiplicity_table(n, d).
CheckResult brute_equiv(int n, int d, const EnumerationBudget& budget = {});

/// h_recurrence, egf_solve and the single-component nest sum agree for n.
CheckResult three_way_check(int n, int d, const EnumerationBudget& budget = {});

/// The identity residual of the recurrence series vanishes to the given order.
CheckResult identity_check(int order, int d);

/// Formal blowup schema: base plus the center shifted by j = 1..r-1.
std::vector<DecompositionTerm> blowup_schema(const std::vector<DecompositionTerm>& base,
                                             const std::vector<DecompositionTerm>& center, int r);

/// X[3] assembled as X^3 blown up along the small diagonal (center X,
/// codimension 2d), then along the three disjoint transforms of the pair
/// diagonals (each center X[2], codimension d). Requires d >= 2.
FormalDecomposition x3_oracle(int d);

/// x3_oracle(d) == decompose_formal(3, d).
CheckResult x3_check(int d);

/// X[2] = Bl_diagonal(X^2) through blowup_formula on symbolic tables, compared
/// with evaluate_decomposition of decompose_formal(2, d) at every index in a
/// window, for all four theories.
CheckResult x2_blowup_check(int d);

/// X[2]: X^2 once plus X at shifts 1..d-1 once each.
CheckResult x2_formula_check(int d);

/// X[3]: X^2 three times at shifts 1..d-1 and X at shift j with multiplicity
/// min{3j-2, 6d-3j-2} for 1 <= j <= 2d-1.
CheckResult x3_formula_check(int d);

/// betti_of_fm is palindromic of degree 2dn. Throws InvalidArgument unless
/// betti_x is palindromic of degree 2d with d >= 1.
CheckResult palindrome_check(const IntPoly& betti_x, int d, int n);

/// a_{n,0} = 1, a_{m,0} = 0 for m < n, nonnegative entries, none past
/// d(n-1)-1, and deg h_n = d(n-1)-1 when n, d >= 2.
CheckResult structure_check(int n, int d);

struct VerifyOptions {
  int max_n = 5;
  int max_d = 3;
  bool budget_override = false;
};

/// Full grid of checks in a fixed order. Throws BudgetExceeded when max_n is
/// past the enumeration cap without the override.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace fmc
