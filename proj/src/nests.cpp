#include "fmc/nests.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"

namespace fmc {

Subset singleton(int label) { return Subset{1} << (label - 1); }

Subset subset_of(const std::vector<int>& labels) {
  Subset s = 0;
  for (int l : labels) {
    if (l < 1 || l > kMaxLabels) throw InvalidArgument("label " + std::to_string(l) + " out of range");
    s |= singleton(l);
  }
  return s;
}

std::vector<int> labels_of(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

int subset_size(Subset s) { return std::popcount(s); }

bool canonical_less(Subset a, Subset b) {
  const int sa = subset_size(a), sb = subset_size(b);
  if (sa != sb) return sa < sb;
  // Same size: the lexicographically smaller label list has the lowest
  // differing label in it.
  const Subset diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & -diff)) != 0;
}

void EnumerationBudget::check(int n) const {
  if (n < 1) throw InvalidArgument("label count must be at least 1, got " + std::to_string(n));
  if (n > kMaxLabels) throw InvalidArgument("label count " + std::to_string(n) + " exceeds " + std::to_string(kMaxLabels));
  if (!override_cap && n > max_labels) {
    throw BudgetExceeded("nest enumeration for n=" + std::to_string(n) + " exceeds the budget of n<=" +
                         std::to_string(max_labels) + "; pass the budget override to force it");
  }
}

Nest::Nest(int n, std::vector<Subset> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_nest(n_, members_)) throw InvalidArgument("family is not a nest of [" + std::to_string(n) + "]");
}

std::vector<Subset> Nest::internal() const {
  std::vector<Subset> out;
  for (Subset s : members_) {
    if (subset_size(s) >= 2) out.push_back(s);
  }
  return out;
}

bool operator<(const Nest& a, const Nest& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                                      canonical_less);
}

bool is_nest(int n, const std::vector<Subset>& family) {
  if (n < 1 || n > kMaxLabels) return false;
  const Subset universe = n == 32 ? ~Subset{0} : (Subset{1} << n) - 1;
  for (Subset s : family) {
    if (s == 0 || (s & ~universe) != 0) return false;
  }
  for (int l = 1; l <= n; ++l) {
    if (std::find(family.begin(), family.end(), singleton(l)) == family.end()) return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Subset a = family[i], b = family[j];
      const Subset meet = a & b;
      if (meet != 0 && meet != a && meet != b) return false;
    }
  }
  return true;
}

namespace {

// Calls visit(blocks) for every set partition of mask. The block holding the
// lowest remaining label is chosen first, so each partition appears once.
void for_each_set_partition(Subset mask, std::vector<Subset>& blocks,
                            const std::function<void(const std::vector<Subset>&)>& visit) {
  if (mask == 0) {
    visit(blocks);
    return;
  }
  const Subset low = mask & -mask;
  const Subset rest = mask ^ low;
  // Enumerate subsets of rest, including rest itself and the empty set.
  Subset sub = rest;
  while (true) {
    blocks.push_back(low | sub);
    for_each_set_partition(rest ^ sub, blocks, visit);
    blocks.pop_back();
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
}

using NodeLists = std::vector<std::vector<Subset>>;

class ForestBuilder {
 public:
  // Internal-node lists of every tree whose leaf set is mask.
  const NodeLists& trees(Subset mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    NodeLists out;
    if (subset_size(mask) == 1) {
      out.emplace_back();
    } else {
      std::vector<Subset> blocks;
      for_each_set_partition(mask, blocks, [&](const std::vector<Subset>& part) {
        if (part.size() < 2) return;
        append_products(part, {mask}, out);
      });
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

  // For each choice of one tree per block, emit base + all internal nodes.
  void append_products(const std::vector<Subset>& blocks, const std::vector<Subset>& base, NodeLists& out) {
    // Copy the child lists first: trees() may insert into memo_.
    std::vector<NodeLists> choices;
    choices.reserve(blocks.size());
    for (Subset b : blocks) choices.push_back(trees(b));
    std::vector<Subset> acc = base;
    product(choices, 0, acc, out);
  }

 private:
  static void product(const std::vector<NodeLists>& choices, std::size_t i, std::vector<Subset>& acc,
                      NodeLists& out) {
    if (i == choices.size()) {
      out.push_back(acc);
      return;
    }
    for (const auto& pick : choices[i]) {
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), pick.begin(), pick.end());
      product(choices, i + 1, acc, out);
      acc.resize(mark);
    }
  }

  std::map<Subset, NodeLists> memo_;
};

}  // namespace

std::vector<Nest> enumerate_nests(int n, const EnumerationBudget& budget) {
  budget.check(n);
  const Subset universe = (Subset{1} << n) - 1;
  std::vector<Subset> leaves;
  for (int l = 1; l <= n; ++l) leaves.push_back(singleton(l));

  ForestBuilder builder;
  NodeLists forests;
  std::vector<Subset> blocks;
  for_each_set_partition(universe, blocks, [&](const std::vector<Subset>& part) {
    builder.append_products(part, leaves, forests);
  });

  std::vector<Nest> out;
  out.reserve(forests.size());
  for (auto& members : forests) out.emplace_back(n, std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

NestStats nest_stats(const Nest& s) {
  const auto& members = s.members();
  // Members containing a given one form a chain; the parent is the smallest.
  std::vector<int> parent(members.size(), -1);
  for (std::size_t j = 0; j < members.size(); ++j) {
    int best = -1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i == j) continue;
      if ((members[i] & members[j]) == members[j] && members[i] != members[j]) {
        if (best < 0 || subset_size(members[i]) < subset_size(members[best])) best = static_cast<int>(i);
      }
    }
    parent[j] = best;
  }

  NestStats stats;
  std::vector<int> son_count(members.size(), 0);
  for (std::size_t j = 0; j < members.size(); ++j) {
    if (parent[j] < 0) {
      ++stats.components;
    } else {
      ++son_count[parent[j]];
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (subset_size(members[i]) >= 2) stats.sons.emplace_back(members[i], son_count[i]);
  }
  return stats;
}

IntPoly nest_weight(const Nest& s, int d) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  IntPoly w{1};
  for (const auto& [node, sons] : nest_stats(s).sons) w *= sigma(sons - 1, d);
  return w;
}

std::map<int, IntPoly> brute_bivariate(int n, int d, const EnumerationBudget& budget) {
  if (d < 1) throw InvalidArgument("dimension must be at least 1");
  std::map<int, IntPoly> out;
  for (int m = 1; m <= n; ++m) out[m] = IntPoly{};
  for (const Nest& s : enumerate_nests(n, budget)) out[nest_stats(s).components] += nest_weight(s, d);
  return out;
}

}  // namespace fmc
