#pragma once

// Nests of [n] = {1..n}: families of subsets containing every singleton in
// which no two members overlap. A nest is the same thing as a forest whose
// leaves are the labels; its non-singleton members are the internal nodes.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fmc/polyseries.hpp"

namespace fmc {

/// Subset of [n] as a bitmask; label l (1-based) is bit l-1.
using Subset = std::uint32_t;

inline constexpr int kMaxLabels = 31;

Subset singleton(int label);
Subset subset_of(const std::vector<int>& labels);
std::vector<int> labels_of(Subset s);
int subset_size(Subset s);

/// Canonical member order: by size, then lexicographically by sorted labels.
bool canonical_less(Subset a, Subset b);

/// Default cap on the label count accepted by exhaustive enumeration.
inline constexpr int kDefaultNestBudget = 7;

struct EnumerationBudget {
  int max_labels = kDefaultNestBudget;
  /// Lift the cap entirely (still bounded by kMaxLabels).
  bool override_cap = false;

  void check(int n) const;
};

class Nest {
 public:
  /// Validates the family; throws InvalidArgument if it is not a nest.
  Nest(int n, std::vector<Subset> members);

  int n() const noexcept { return n_; }
  /// All members in canonical order, singletons included.
  const std::vector<Subset>& members() const noexcept { return members_; }
  /// Non-singleton members in canonical order.
  std::vector<Subset> internal() const;

  friend bool operator==(const Nest&, const Nest&) = default;
  /// Lexicographic on the canonical member sequences.
  friend bool operator<(const Nest& a, const Nest& b);

 private:
  int n_;
  std::vector<Subset> members_;
};

struct NestStats {
  /// c(S): number of maximal members.
  int components = 0;
  /// c_I for every non-singleton member I, in canonical member order.
  std::vector<std::pair<Subset, int>> sons;
};

bool is_nest(int n, const std::vector<Subset>& family);

/// Every nest of [n] exactly once, sorted by canonical member sequence.
std::vector<Nest> enumerate_nests(int n, const EnumerationBudget& budget = {});

NestStats nest_stats(const Nest& s);

/// Product over internal nodes I of sigma_{c_I - 1}(x); 1 for the all-singleton nest.
IntPoly nest_weight(const Nest& s, int d);

/// m -> sum of nest weights over nests with m components, for m = 1..n.
std::map<int, IntPoly> brute_bivariate(int n, int d, const EnumerationBudget& budget = {});

}  // namespace fmc
