#pragma once

// Graded group data for spaces and evaluation of the decomposition of X[n]
// into shifted copies of the powers X^m, for Lawson homology, Chow groups,
// Deligne-Beilinson cohomology and rational Betti numbers.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmc/polyseries.hpp"

namespace fmc {

enum class Theory { lawson, chow, db, betti };

std::string_view theory_name(Theory t);
/// Throws InvalidArgument on an unknown name.
Theory parse_theory(std::string_view name);

/// Index into a graded theory. Lawson L_pH_k and Deligne-Beilinson
/// H^k_D(-, Z(p)) use both fields; Chow Ch_p uses p only (k = 0); Betti H_k
/// uses k only (p = 0).
struct Index {
  int p = 0;
  int k = 0;
  friend auto operator<=>(const Index&, const Index&) = default;
};

/// Outer indices accepted by each theory: Lawson needs k >= 2p >= 0, Chow
/// p >= 0, Betti k >= 0; Deligne-Beilinson accepts any pair.
bool valid_outer_index(Theory t, Index idx);
/// Drops the coordinate a theory ignores.
Index normalize_index(Theory t, Index idx);

/// An unevaluated summand: mult copies of the named group.
struct FormalTerm {
  std::string group;
  BigInt mult;
  friend bool operator==(const FormalTerm&, const FormalTerm&) = default;
};

/// A finitely generated abelian group Z^r + sum of Z/q, plus an optional list
/// of formal summands that cannot be evaluated. Kept in a canonical normal
/// form so that direct sums compare equal regardless of order.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  static GroupDescriptor zero() { return {}; }
  static GroupDescriptor free(const BigInt& rank);
  /// Z^rank plus one cyclic summand per entry of torsion (each >= 2).
  static GroupDescriptor make(const BigInt& rank, const std::vector<BigInt>& torsion);
  static GroupDescriptor formal(std::string group, const BigInt& mult = 1);

  const BigInt& free_rank() const noexcept { return free_rank_; }
  /// order -> number of Z/order summands.
  const std::map<BigInt, BigInt>& torsion() const noexcept { return torsion_; }
  /// Sorted by group name, multiplicities merged.
  const std::vector<FormalTerm>& formal_terms() const noexcept { return formal_; }

  bool is_formal() const noexcept { return !formal_.empty(); }
  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty() && formal_.empty(); }

  GroupDescriptor& operator+=(const GroupDescriptor& rhs);
  friend GroupDescriptor operator+(GroupDescriptor lhs, const GroupDescriptor& rhs) { return lhs += rhs; }
  /// Direct sum of mult copies.
  GroupDescriptor times(const BigInt& mult) const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  BigInt free_rank_ = 0;
  std::map<BigInt, BigInt> torsion_;
  std::vector<FormalTerm> formal_;
};

/// e.g. "Z^3 + (Z/2)^2", "0", or with formal parts "Z + 2*H^{0}_D(X,Z(-1))".
std::string to_string(const GroupDescriptor& g);

/// Sparse table of groups for one theory. Entries absent from the map are the
/// zero group.
class GradedTable {
 public:
  explicit GradedTable(Theory theory) : theory_(theory) {}

  Theory theory() const noexcept { return theory_; }
  void set(Index idx, GroupDescriptor g);
  /// Raw lookup, no index conventions applied.
  GroupDescriptor get(Index idx) const;
  const std::map<Index, GroupDescriptor>& entries() const noexcept { return entries_; }

  friend bool operator==(const GradedTable&, const GradedTable&) = default;

 private:
  Theory theory_;
  std::map<Index, GroupDescriptor> entries_;
};

/// Rational homology table H_k -> Z^{b_k} from a Betti polynomial.
GradedTable betti_table(const IntPoly& betti);

/// Where the summand shifted by `shift` is read for an outer index:
/// (p - shift, k - 2 shift) with the theory's conventions. Empty when the
/// summand is the zero group (negative degree, or negative Chow dimension).
/// A Lawson level below zero reads level 0. A Deligne-Beilinson level below
/// zero is returned as is; callers decide how to treat it.
std::optional<Index> shifted_index(Theory t, Index outer, int shift);

/// Display name of the group of X^m at an index, e.g. "L_{1}H_{2}(X^2)",
/// "Ch_{0}(X)", "H^{2}_D(X^2,Z(1))", "H_{4}(X^3)".
std::string group_symbol(Theory t, Index idx, int power, std::string_view space = "X");

struct SpaceDescriptor {
  std::string name;
  int dim = 1;
  Theory kind = Theory::betti;
  /// Set for kind == betti.
  std::optional<IntPoly> betti;
  /// Table of X itself for the other kinds.
  std::optional<GradedTable> table;
  /// Tables for X^m, m >= 2.
  std::map<int, GradedTable> powers;

  /// Table for X^m. For Betti data the powers are derived with
  /// kunneth_rational; otherwise they must have been supplied.
  /// Throws MissingTable.
  GradedTable power_table(int m) const;
  /// Throws InvalidArgument when the invariants of the kind are violated.
  void validate() const;
};

struct DecompositionTerm {
  int m = 1;      // number of factors of X
  int shift = 0;  // i = ||mu||
  BigInt mult;
  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

/// Terms in canonical order: m descending, then shift ascending.
struct FormalDecomposition {
  int n = 1;
  int d = 1;
  std::vector<DecompositionTerm> terms;
  friend bool operator==(const FormalDecomposition&, const FormalDecomposition&) = default;
};

/// Sort into canonical order, merge equal (m, shift) and drop zero terms.
void canonicalize(std::vector<DecompositionTerm>& terms);

FormalDecomposition decompose_formal(int n, int d);

/// One term of a decomposition instantiated at an outer index.
struct Summand {
  DecompositionTerm term;
  /// Empty when the summand vanishes.
  std::optional<Index> inner;
};

/// The index bookkeeping shared by all four theories.
std::vector<Summand> expand_terms(const FormalDecomposition& dec, Theory t, Index outer);

/// Unevaluated direct sum: one formal term per nonvanishing summand.
GroupDescriptor evaluate_formal(const FormalDecomposition& dec, Theory t, Index outer);

/// Direct sum over terms of mult copies of the group of X^m at the inner
/// index. Deligne-Beilinson summands with negative level stay formal.
/// Throws InvalidArgument on an invalid outer index or a kind mismatch and
/// MissingTable when a power table is absent.
GroupDescriptor evaluate_decomposition(const FormalDecomposition& dec, const SpaceDescriptor& space, Theory t,
                                       Index outer);

/// Blowup of X along a smooth center Y of codimension r:
///   x[idx] + sum_{j=1}^{r-1} y[shifted(idx, j)].
/// Both tables must be of the same theory. For Deligne-Beilinson a negative
/// level read throws InvalidArgument.
GroupDescriptor blowup_formula(const GradedTable& x, const GradedTable& y, int r, Index idx);

/// Projective bundle P(E) -> Y with fibre P^{r-1}: sum_{j=0}^{r-1} y[shifted(idx, j)].
GroupDescriptor proj_bundle_formula(const GradedTable& y, int r, Index idx);

/// Table of a projective bundle with fibre P^{r-1} over Y, evaluated at every
/// index up to the given top degree.
GradedTable proj_bundle_table(const GradedTable& y, int r, int top_degree);

/// m-th power of a rational Betti polynomial in q.
IntPoly kunneth_rational(const IntPoly& betti_x, int m);

/// Poincare polynomial of X[n]: sum_{m,i} a_{m,i} q^{2i} P_X(q)^m.
IntPoly betti_of_fm(const IntPoly& betti_x, int d, int n);

/// Built-in sample spaces: "point", "P1", "P2" (and "P<a>" generally) for
/// kinds lawson, chow and betti. Power tables up to max_power are derived by
/// iterating proj_bundle_table, since P^a x Z is a trivial P^a-bundle over Z.
SpaceDescriptor builtin_space(std::string_view name, Theory kind, int max_power = 1);

/// L_pH_k(P^a): rank 1 for even k with 2p <= k <= 2a. Read straight from that
/// closed form rather than from the bundle formula.
GradedTable projective_space_lawson(int a);

}  // namespace fmc
