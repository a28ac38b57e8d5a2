#include "fmc/theory.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"

namespace fmc {

std::string_view theory_name(Theory t) {
  switch (t) {
    case Theory::lawson: return "lawson";
    case Theory::chow: return "chow";
    case Theory::db: return "db";
    case Theory::betti: return "betti";
  }
  return "?";
}

Theory parse_theory(std::string_view name) {
  for (Theory t : {Theory::lawson, Theory::chow, Theory::db, Theory::betti}) {
    if (theory_name(t) == name) return t;
  }
  throw InvalidArgument("unknown theory '" + std::string(name) + "' (expected lawson, chow, db or betti)");
}

bool valid_outer_index(Theory t, Index idx) {
  switch (t) {
    case Theory::lawson: return idx.p >= 0 && idx.k >= 2 * idx.p;
    case Theory::chow: return idx.p >= 0;
    case Theory::db: return true;
    case Theory::betti: return idx.k >= 0;
  }
  return false;
}

Index normalize_index(Theory t, Index idx) {
  if (t == Theory::chow) idx.k = 0;
  if (t == Theory::betti) idx.p = 0;
  return idx;
}

GroupDescriptor GroupDescriptor::free(const BigInt& rank) {
  if (rank < 0) throw InvalidArgument("free rank must be nonnegative");
  GroupDescriptor g;
  g.free_rank_ = rank;
  return g;
}

GroupDescriptor GroupDescriptor::make(const BigInt& rank, const std::vector<BigInt>& torsion) {
  GroupDescriptor g = free(rank);
  for (const auto& q : torsion) {
    if (q < 2) throw InvalidArgument("torsion orders must be at least 2, got " + q.str());
    g.torsion_[q] += 1;
  }
  return g;
}

GroupDescriptor GroupDescriptor::formal(std::string group, const BigInt& mult) {
  GroupDescriptor g;
  if (mult > 0) g.formal_.push_back({std::move(group), mult});
  return g;
}

GroupDescriptor& GroupDescriptor::operator+=(const GroupDescriptor& rhs) {
  free_rank_ += rhs.free_rank_;
  for (const auto& [q, c] : rhs.torsion_) torsion_[q] += c;
  for (const auto& term : rhs.formal_) {
    auto it = std::lower_bound(formal_.begin(), formal_.end(), term.group,
                               [](const FormalTerm& a, const std::string& name) { return a.group < name; });
    if (it != formal_.end() && it->group == term.group) {
      it->mult += term.mult;
    } else {
      formal_.insert(it, term);
    }
  }
  return *this;
}

GroupDescriptor GroupDescriptor::times(const BigInt& mult) const {
  if (mult < 0) throw InvalidArgument("multiplicity must be nonnegative");
  if (mult == 0) return {};
  GroupDescriptor g = *this;
  g.free_rank_ *= mult;
  for (auto& [q, c] : g.torsion_) c *= mult;
  for (auto& term : g.formal_) term.mult *= mult;
  return g;
}

std::string to_string(const GroupDescriptor& g) {
  if (g.is_zero()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank() == 1) {
    parts.emplace_back("Z");
  } else if (g.free_rank() > 1) {
    parts.push_back("Z^" + g.free_rank().str());
  }
  for (const auto& [q, c] : g.torsion()) {
    parts.push_back(c == 1 ? "Z/" + q.str() : "(Z/" + q.str() + ")^" + c.str());
  }
  for (const auto& term : g.formal_terms()) {
    parts.push_back(term.mult == 1 ? term.group : term.mult.str() + "*" + term.group);
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void GradedTable::set(Index idx, GroupDescriptor g) {
  idx = normalize_index(theory_, idx);
  if (g.is_zero()) {
    entries_.erase(idx);
  } else {
    entries_[idx] = std::move(g);
  }
}

GroupDescriptor GradedTable::get(Index idx) const {
  auto it = entries_.find(normalize_index(theory_, idx));
  return it == entries_.end() ? GroupDescriptor{} : it->second;
}

GradedTable betti_table(const IntPoly& betti) {
  GradedTable t(Theory::betti);
  for (std::size_t k = 0; k < betti.coeffs().size(); ++k) {
    t.set({0, static_cast<int>(k)}, GroupDescriptor::free(betti.coeffs()[k]));
  }
  return t;
}

std::optional<Index> shifted_index(Theory t, Index outer, int shift) {
  Index in{outer.p - shift, outer.k - 2 * shift};
  switch (t) {
    case Theory::lawson:
      if (in.k < 0) return std::nullopt;
      in.p = std::max(in.p, 0);
      return in;
    case Theory::chow:
      if (in.p < 0) return std::nullopt;
      return Index{in.p, 0};
    case Theory::db:
      if (in.k < 0) return std::nullopt;
      return in;
    case Theory::betti:
      if (in.k < 0) return std::nullopt;
      return Index{0, in.k};
  }
  return std::nullopt;
}

std::string group_symbol(Theory t, Index idx, int power, std::string_view space) {
  std::string x(space);
  if (power != 1) x += "^" + std::to_string(power);
  const std::string p = std::to_string(idx.p), k = std::to_string(idx.k);
  switch (t) {
    case Theory::lawson: return "L_{" + p + "}H_{" + k + "}(" + x + ")";
    case Theory::chow: return "Ch_{" + p + "}(" + x + ")";
    case Theory::db: return "H^{" + k + "}_D(" + x + ",Z(" + p + "))";
    case Theory::betti: return "H_{" + k + "}(" + x + ")";
  }
  return x;
}

GradedTable SpaceDescriptor::power_table(int m) const {
  if (m < 1) throw InvalidArgument("power must be at least 1");
  if (kind == Theory::betti) {
    if (!betti) throw MissingTable("space '" + name + "' has no Betti polynomial");
    return betti_table(kunneth_rational(*betti, m));
  }
  if (m == 1) {
    if (!table) throw MissingTable("space '" + name + "' has no table");
    return *table;
  }
  auto it = powers.find(m);
  if (it == powers.end()) {
    throw MissingTable("space '" + name + "' has no table for " + name + "^" + std::to_string(m) +
                       "; integral tables for powers must be supplied explicitly");
  }
  return it->second;
}

void SpaceDescriptor::validate() const {
  if (name.empty()) throw InvalidArgument("space name must not be empty");
  if (dim < 0) throw InvalidArgument("space dimension must be nonnegative");
  auto check_table = [&](const GradedTable& t, const std::string& what) {
    if (t.theory() != kind) throw InvalidArgument(what + " is not a " + std::string(theory_name(kind)) + " table");
    for (const auto& [idx, g] : t.entries()) {
      if (idx.k < 0) throw InvalidArgument(what + ": negative degree in table");
      if ((kind == Theory::lawson || kind == Theory::chow) && idx.p < 0) {
        throw InvalidArgument(what + ": negative level in table");
      }
      if (kind == Theory::lawson && idx.k < 2 * idx.p) throw InvalidArgument(what + ": Lawson entry with k < 2p");
    }
  };
  if (kind == Theory::betti) {
    if (!betti) throw InvalidArgument("betti space needs a Betti polynomial");
    if (table || !powers.empty()) throw InvalidArgument("betti space must not carry tables");
    for (const auto& c : betti->coeffs()) {
      if (c < 0) throw InvalidArgument("Betti numbers must be nonnegative");
    }
    if (betti->degree() > 2 * dim) throw InvalidArgument("Betti polynomial degree exceeds 2*dim");
    return;
  }
  if (betti) throw InvalidArgument(std::string(theory_name(kind)) + " space must not carry a Betti polynomial");
  if (!table) throw InvalidArgument(std::string(theory_name(kind)) + " space needs a table");
  check_table(*table, "table");
  for (const auto& [m, t] : powers) {
    if (m < 2) throw InvalidArgument("power tables start at m = 2");
    check_table(t, "power " + std::to_string(m));
  }
}

void canonicalize(std::vector<DecompositionTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const DecompositionTerm& a, const DecompositionTerm& b) {
    return a.m != b.m ? a.m > b.m : a.shift < b.shift;
  });
  std::vector<DecompositionTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().m == t.m && merged.back().shift == t.shift) {
      merged.back().mult += t.mult;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const DecompositionTerm& t) { return t.mult == 0; });
  terms = std::move(merged);
}

FormalDecomposition decompose_formal(int n, int d) {
  const MultiplicityTable table = multiplicity_table(n, d);
  FormalDecomposition dec{n, d, {}};
  for (int m = n; m >= 1; --m) {
    const auto& row = table.row(m);
    for (std::size_t i = 0; i < row.coeffs().size(); ++i) {
      if (row.coeffs()[i] != 0) dec.terms.push_back({m, static_cast<int>(i), row.coeffs()[i]});
    }
  }
  return dec;
}

std::vector<Summand> expand_terms(const FormalDecomposition& dec, Theory t, Index outer) {
  std::vector<Summand> out;
  out.reserve(dec.terms.size());
  for (const auto& term : dec.terms) out.push_back({term, shifted_index(t, outer, term.shift)});
  return out;
}

namespace {

void require_outer(Theory t, Index outer) {
  if (!valid_outer_index(t, outer)) {
    throw InvalidArgument("invalid " + std::string(theory_name(t)) + " index (p=" + std::to_string(outer.p) +
                          ", k=" + std::to_string(outer.k) + ")" +
                          (t == Theory::lawson ? "; Lawson homology needs k >= 2p >= 0" : ""));
  }
}

}  // namespace

GroupDescriptor evaluate_formal(const FormalDecomposition& dec, Theory t, Index outer) {
  require_outer(t, outer);
  GroupDescriptor sum;
  for (const auto& s : expand_terms(dec, t, normalize_index(t, outer))) {
    if (s.inner) sum += GroupDescriptor::formal(group_symbol(t, *s.inner, s.term.m), s.term.mult);
  }
  return sum;
}

GroupDescriptor evaluate_decomposition(const FormalDecomposition& dec, const SpaceDescriptor& space, Theory t,
                                       Index outer) {
  require_outer(t, outer);
  if (space.kind != t) {
    throw InvalidArgument("space '" + space.name + "' carries " + std::string(theory_name(space.kind)) +
                          " data, not " + std::string(theory_name(t)));
  }
  if (space.dim != dec.d) {
    throw InvalidArgument("space dimension " + std::to_string(space.dim) + " does not match d=" +
                          std::to_string(dec.d));
  }
  std::map<int, GradedTable> tables;
  GroupDescriptor sum;
  for (const auto& s : expand_terms(dec, t, normalize_index(t, outer))) {
    if (!s.inner) continue;
    if (t == Theory::db && s.inner->p < 0) {
      sum += GroupDescriptor::formal(group_symbol(t, *s.inner, s.term.m, space.name), s.term.mult);
      continue;
    }
    auto it = tables.find(s.term.m);
    if (it == tables.end()) it = tables.emplace(s.term.m, space.power_table(s.term.m)).first;
    sum += it->second.get(*s.inner).times(s.term.mult);
  }
  return sum;
}

namespace {

GroupDescriptor read_shifted(const GradedTable& t, Index idx, int shift) {
  auto in = shifted_index(t.theory(), idx, shift);
  if (!in) return {};
  if (t.theory() == Theory::db && in->p < 0) {
    throw InvalidArgument("Deligne-Beilinson read at negative level " + std::to_string(in->p));
  }
  return t.get(*in);
}

}  // namespace

GroupDescriptor blowup_formula(const GradedTable& x, const GradedTable& y, int r, Index idx) {
  if (r < 1) throw InvalidArgument("blowup codimension must be at least 1");
  if (x.theory() != y.theory()) throw InvalidArgument("blowup_formula: tables of different theories");
  require_outer(x.theory(), idx);
  idx = normalize_index(x.theory(), idx);
  GroupDescriptor sum = x.get(idx);
  for (int j = 1; j <= r - 1; ++j) sum += read_shifted(y, idx, j);
  return sum;
}

GroupDescriptor proj_bundle_formula(const GradedTable& y, int r, Index idx) {
  if (r < 1) throw InvalidArgument("bundle rank parameter must be at least 1");
  require_outer(y.theory(), idx);
  idx = normalize_index(y.theory(), idx);
  GroupDescriptor sum;
  for (int j = 0; j <= r - 1; ++j) sum += read_shifted(y, idx, j);
  return sum;
}

GradedTable proj_bundle_table(const GradedTable& y, int r, int top_degree) {
  GradedTable out(y.theory());
  switch (y.theory()) {
    case Theory::lawson:
      for (int k = 0; k <= top_degree; ++k) {
        for (int p = 0; 2 * p <= k; ++p) out.set({p, k}, proj_bundle_formula(y, r, {p, k}));
      }
      break;
    case Theory::chow:
      for (int p = 0; p <= top_degree; ++p) out.set({p, 0}, proj_bundle_formula(y, r, {p, 0}));
      break;
    case Theory::betti:
      for (int k = 0; k <= top_degree; ++k) out.set({0, k}, proj_bundle_formula(y, r, {0, k}));
      break;
    case Theory::db:
      throw InvalidArgument("proj_bundle_table: Deligne-Beilinson tables are not tabulated");
  }
  return out;
}

IntPoly kunneth_rational(const IntPoly& betti_x, int m) {
  if (m < 1) throw InvalidArgument("power must be at least 1");
  IntPoly r = betti_x;
  for (int i = 1; i < m; ++i) r *= betti_x;
  return r;
}

IntPoly betti_of_fm(const IntPoly& betti_x, int d, int n) {
  if (d < 1 || n < 1) throw InvalidArgument("betti_of_fm needs d >= 1 and n >= 1");
  if (betti_x.degree() > 2 * d) throw InvalidArgument("Betti polynomial degree exceeds 2d");
  for (const auto& c : betti_x.coeffs()) {
    if (c < 0) throw InvalidArgument("Betti numbers must be nonnegative");
  }
  const MultiplicityTable table = multiplicity_table(n, d);
  IntPoly out;
  IntPoly power{1};
  for (int m = 1; m <= n; ++m) {
    power *= betti_x;
    const auto& row = table.row(m);
    // sum_i a_{m,i} q^{2i}
    std::vector<BigInt> spread(row.coeffs().empty() ? 0 : 2 * row.coeffs().size() - 1);
    for (std::size_t i = 0; i < row.coeffs().size(); ++i) spread[2 * i] = row.coeffs()[i];
    out += poly_mul(IntPoly(std::move(spread)), power);
  }
  return out;
}

GradedTable projective_space_lawson(int a) {
  if (a < 0) throw InvalidArgument("projective space dimension must be nonnegative");
  GradedTable t(Theory::lawson);
  for (int k = 0; k <= 2 * a; k += 2) {
    for (int p = 0; 2 * p <= k; ++p) t.set({p, k}, GroupDescriptor::free(1));
  }
  return t;
}

namespace {

int parse_projective_name(std::string_view name) {
  if (name == "point") return 0;
  if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'p')) {
    int a = -1;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), a);
    if (ec == std::errc{} && ptr == name.data() + name.size() && a >= 0) return a;
  }
  throw InvalidArgument("unknown built-in space '" + std::string(name) + "' (expected point, P1, P2, ...)");
}

}  // namespace

SpaceDescriptor builtin_space(std::string_view name, Theory kind, int max_power) {
  const int a = parse_projective_name(name);
  SpaceDescriptor s;
  s.name = a == 0 ? "point" : "P" + std::to_string(a);
  s.dim = a;
  s.kind = kind;
  switch (kind) {
    case Theory::betti: {
      std::vector<BigInt> c(2 * a + 1);
      for (int k = 0; k <= 2 * a; k += 2) c[k] = 1;
      s.betti = IntPoly(std::move(c));
      return s;
    }
    case Theory::lawson:
      s.table = projective_space_lawson(a);
      break;
    case Theory::chow: {
      GradedTable t(Theory::chow);
      for (int p = 0; p <= a; ++p) t.set({p, 0}, GroupDescriptor::free(1));
      s.table = std::move(t);
      break;
    }
    case Theory::db:
      throw InvalidArgument("no built-in Deligne-Beilinson data; supply a descriptor file");
  }
  const int top = kind == Theory::chow ? 1 : 2;
  GradedTable prev = *s.table;
  for (int m = 2; m <= max_power; ++m) {
    prev = proj_bundle_table(prev, a + 1, top * a * m);
    s.powers.emplace(m, prev);
  }
  return s;
}

}  // namespace fmc
