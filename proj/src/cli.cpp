#include "fmc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fmc/errors.hpp"
#include "fmc/genfun.hpp"
#include "fmc/nests.hpp"
#include "fmc/oracle.hpp"
#include "fmc/space_io.hpp"
#include "fmc/theory.hpp"
#include "json_util.hpp"

namespace fmc::cli {

using detail::Json;

namespace {

struct Options {
  int n = 0;
  int d = 0;
  std::optional<int> p;
  std::optional<int> k;
  std::string theory = "lawson";
  std::string space;
  std::string mode = "formal";
  std::string format = "json";
  bool verify = false;
  bool budget_override = false;
  int max_n = 5;
  int max_d = 3;
};

void require_at_least_one(int v, const char* flag) {
  if (v < 1) throw InvalidArgument(std::string(flag) + " must be at least 1 (got " + std::to_string(v) + ")");
}

std::string set_text(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int l : labels_of(s)) {
    out += (first ? "" : ",") + std::to_string(l);
    first = false;
  }
  return out + "}";
}

Json set_json(Subset s) {
  Json arr = Json::array();
  for (int l : labels_of(s)) arr.push_back(l);
  return arr;
}

Json term_json(const DecompositionTerm& t) {
  Json j = Json::object();
  j["m"] = t.m;
  j["shift"] = t.shift;
  j["mult"] = detail::big_to_json(t.mult);
  return j;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

int cmd_nests(const Options& o, std::ostream& out) {
  require_at_least_one(o.n, "--n");
  const auto nests = enumerate_nests(o.n, EnumerationBudget{kDefaultNestBudget, o.budget_override});
  if (o.format == "text") {
    out << nests.size() << " nests of [" << o.n << "]\n";
    for (const auto& s : nests) {
      const NestStats st = nest_stats(s);
      std::string line;
      for (Subset m : s.members()) line += (line.empty() ? "" : " ") + set_text(m);
      line += "  c=" + std::to_string(st.components);
      for (const auto& [node, sons] : st.sons) line += "  c_" + set_text(node) + "=" + std::to_string(sons);
      out << line << '\n';
    }
    return kExitOk;
  }
  Json doc = Json::object();
  doc["n"] = o.n;
  doc["count"] = nests.size();
  Json list = Json::array();
  for (const auto& s : nests) {
    const NestStats st = nest_stats(s);
    Json j = Json::object();
    Json members = Json::array();
    for (Subset m : s.members()) members.push_back(set_json(m));
    j["members"] = std::move(members);
    j["components"] = st.components;
    Json sons = Json::array();
    for (const auto& [node, c] : st.sons) {
      Json e = Json::object();
      e["set"] = set_json(node);
      e["sons"] = c;
      sons.push_back(std::move(e));
    }
    j["sons"] = std::move(sons);
    list.push_back(std::move(j));
  }
  doc["nests"] = std::move(list);
  emit(out, doc);
  return kExitOk;
}

int cmd_hpoly(const Options& o, std::ostream& out) {
  require_at_least_one(o.n, "--n");
  require_at_least_one(o.d, "--d");
  const IntPoly h = h_recurrence(o.n, o.d);
  if (o.format == "text") {
    out << "h_" << o.n << "(x) = " << to_string(h) << '\n';
    return kExitOk;
  }
  Json doc = Json::object();
  doc["n"] = o.n;
  doc["d"] = o.d;
  doc["coeffs"] = detail::poly_to_json(h);
  emit(out, doc);
  return kExitOk;
}

int cmd_egf(const Options& o, std::ostream& out) {
  require_at_least_one(o.n, "--n");
  require_at_least_one(o.d, "--d");
  const Egf series = egf_solve(o.n, o.d);
  bool residual_zero = true, matches = true;
  if (o.verify) {
    residual_zero = verify_identity(series, o.d).is_zero();
    matches = series == n_series(o.n, o.d);
  }
  if (o.format == "text") {
    for (std::size_t i = 0; i <= series.order(); ++i) out << "h_" << i << " = " << to_string(series[i]) << '\n';
    if (o.verify) {
      out << "residual " << (residual_zero ? "zero" : "NONZERO") << ", recurrence "
          << (matches ? "agrees" : "DISAGREES") << '\n';
    }
  } else {
    Json doc = Json::object();
    doc["n"] = o.n;
    doc["d"] = o.d;
    Json coeffs = Json::array();
    for (const auto& c : series.coeffs()) coeffs.push_back(detail::poly_to_json(c));
    doc["coeffs"] = std::move(coeffs);
    if (o.verify) {
      Json v = Json::object();
      v["residual_zero"] = residual_zero;
      v["matches_recurrence"] = matches;
      doc["verify"] = std::move(v);
    }
    emit(out, doc);
  }
  return residual_zero && matches ? kExitOk : kExitCheckFailed;
}

int cmd_mult(const Options& o, std::ostream& out) {
  require_at_least_one(o.n, "--n");
  require_at_least_one(o.d, "--d");
  const FormalDecomposition dec = decompose_formal(o.n, o.d);
  if (o.format == "text") {
    out << std::setw(4) << "m" << std::setw(7) << "shift" << "  mult\n";
    for (const auto& t : dec.terms) out << std::setw(4) << t.m << std::setw(7) << t.shift << "  " << t.mult << '\n';
    return kExitOk;
  }
  Json doc = Json::object();
  doc["n"] = o.n;
  doc["d"] = o.d;
  Json entries = Json::array();
  for (const auto& t : dec.terms) entries.push_back(term_json(t));
  doc["entries"] = std::move(entries);
  emit(out, doc);
  return kExitOk;
}

std::string latex_index(const char* base, int shift, int factor) {
  if (shift == 0) return base;
  return std::string(base) + "-" + std::to_string(factor * shift);
}

std::string latex_group(Theory t, int shift, const std::string& x) {
  const std::string p = latex_index("p", shift, 1), k = latex_index("k", shift, 2);
  switch (t) {
    case Theory::lawson: return "L_{" + p + "}H_{" + k + "}(" + x + ")";
    case Theory::chow: return "\\mathrm{Ch}_{" + p + "}(" + x + ")";
    case Theory::db: return "H^{" + k + "}_{\\mathcal{D}}(" + x + ",\\mathbb{Z}(" + p + "))";
    case Theory::betti: return "H_{" + k + "}(" + x + ")";
  }
  return x;
}

std::string render_latex(const FormalDecomposition& dec, Theory t) {
  std::string lhs = latex_group(t, 0, "X[" + std::to_string(dec.n) + "]");
  std::string rhs;
  for (const auto& term : dec.terms) {
    const std::string x = term.m == 1 ? "X" : "X^{" + std::to_string(term.m) + "}";
    std::string g = latex_group(t, term.shift, x);
    if (term.mult != 1) g += "^{\\oplus " + term.mult.str() + "}";
    rhs += (rhs.empty() ? "" : " \\oplus ") + g;
  }
  return lhs + " \\cong " + rhs;
}

std::vector<Index> all_outer_indices(Theory t, int top_degree) {
  std::vector<Index> out;
  switch (t) {
    case Theory::lawson:
      for (int k = 0; k <= top_degree; ++k) {
        for (int p = 0; 2 * p <= k; ++p) out.push_back({p, k});
      }
      break;
    case Theory::chow:
      for (int p = 0; 2 * p <= top_degree; ++p) out.push_back({p, 0});
      break;
    case Theory::betti:
      for (int k = 0; k <= top_degree; ++k) out.push_back({0, k});
      break;
    case Theory::db:
      throw InvalidArgument("--p and --k are required for db in ranks mode");
  }
  return out;
}

Json value_json(Theory t, Index idx, const GroupDescriptor& g) {
  Json v = Json::object();
  if (t != Theory::betti) v["p"] = idx.p;
  if (t != Theory::chow) v["k"] = idx.k;
  if (g.is_formal()) {
    v["formal"] = to_string(g);
    return v;
  }
  v["free_rank"] = detail::big_to_json(g.free_rank());
  Json tors = Json::array();
  for (const auto& [q, c] : g.torsion()) {
    Json e = Json::object();
    e["order"] = detail::big_to_json(q);
    e["count"] = detail::big_to_json(c);
    tors.push_back(std::move(e));
  }
  v["torsion"] = std::move(tors);
  return v;
}

std::string index_text(Theory t, Index idx) {
  switch (t) {
    case Theory::lawson:
    case Theory::db: return "p=" + std::to_string(idx.p) + " k=" + std::to_string(idx.k);
    case Theory::chow: return "p=" + std::to_string(idx.p);
    case Theory::betti: return "k=" + std::to_string(idx.k);
  }
  return {};
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Theory theory = parse_theory(o.theory);
  require_at_least_one(o.n, "--n");
  if (o.mode != "formal" && o.mode != "ranks") throw InvalidArgument("--mode must be formal or ranks");

  std::optional<SpaceDescriptor> space;
  if (!o.space.empty()) {
    constexpr std::string_view prefix = "builtin:";
    if (o.space.starts_with(prefix)) {
      space = builtin_space(std::string_view(o.space).substr(prefix.size()), theory, o.n);
    } else {
      space = load_space(o.space);
    }
  }
  int d = o.d;
  if (space) {
    if (d == 0) d = space->dim;
    if (d != space->dim) {
      throw InvalidArgument("--d " + std::to_string(d) + " does not match the space dimension " +
                            std::to_string(space->dim));
    }
  }
  require_at_least_one(d, "--d");

  // Which index flags a theory takes.
  const bool wants_p = theory != Theory::betti, wants_k = theory != Theory::chow;
  if (!wants_p && o.p) throw InvalidArgument("--p is not used by the betti theory");
  if (!wants_k && o.k) throw InvalidArgument("--k is not used by the chow theory");
  const bool has_index = (o.p || o.k);
  if (has_index && ((wants_p && !o.p) || (wants_k && !o.k))) {
    throw InvalidArgument(std::string(theory_name(theory)) + " needs " +
                          (wants_p && wants_k ? "both --p and --k" : wants_p ? "--p" : "--k"));
  }
  std::optional<Index> index;
  if (has_index) index = normalize_index(theory, Index{o.p.value_or(0), o.k.value_or(0)});
  if (index && !valid_outer_index(theory, *index)) {
    throw InvalidArgument(theory == Theory::lawson ? "--p/--k must satisfy k >= 2p >= 0"
                                                   : "index out of range for " + std::string(theory_name(theory)));
  }

  const bool ranks = o.mode == "ranks";
  if (ranks && !space) throw InvalidArgument("--mode ranks needs --space");

  const FormalDecomposition dec = decompose_formal(o.n, d);
  if (o.format == "latex") {
    out << render_latex(dec, theory) << '\n';
    return kExitOk;
  }

  std::vector<std::pair<Index, GroupDescriptor>> values;
  if (ranks) {
    const std::vector<Index> indices = index ? std::vector<Index>{*index} : all_outer_indices(theory, 2 * d * o.n);
    for (Index idx : indices) values.emplace_back(idx, evaluate_decomposition(dec, *space, theory, idx));
  } else if (index) {
    values.emplace_back(*index, evaluate_formal(dec, theory, *index));
  }

  if (o.format == "text") {
    out << std::string(theory_name(theory)) << " decomposition of X[" << o.n << "], d=" << d << '\n';
    for (const auto& t : dec.terms) out << "  m=" << t.m << " shift=" << t.shift << " mult=" << t.mult << '\n';
    for (const auto& [idx, g] : values) out << index_text(theory, idx) << ": " << to_string(g) << '\n';
    return kExitOk;
  }
  Json doc = Json::object();
  doc["theory"] = std::string(theory_name(theory));
  doc["n"] = o.n;
  doc["d"] = d;
  if (space) doc["space"] = space->name;
  Json terms = Json::array();
  for (const auto& t : dec.terms) terms.push_back(term_json(t));
  doc["terms"] = std::move(terms);
  if (!values.empty()) {
    Json vals = Json::array();
    for (const auto& [idx, g] : values) vals.push_back(value_json(theory, idx, g));
    doc["values"] = std::move(vals);
  }
  emit(out, doc);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_at_least_one(o.max_n, "--max-n");
  require_at_least_one(o.max_d, "--max-d");
  const VerificationReport report = run_verification({o.max_n, o.max_d, o.budget_override});
  if (o.format == "text") {
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << ' ' << c.parameters << "  " << c.detail << '\n';
    }
    out << "overall: " << (report.overall() ? "PASS" : "FAIL") << " (" << report.checks.size() << " checks)\n";
  } else {
    Json doc = Json::object();
    doc["max_n"] = o.max_n;
    doc["max_d"] = o.max_d;
    doc["overall"] = report.overall();
    Json list = Json::array();
    for (const auto& c : report.checks) {
      Json j = Json::object();
      j["name"] = c.name;
      j["parameters"] = c.parameters;
      j["pass"] = c.pass;
      j["detail"] = c.detail;
      list.push_back(std::move(j));
    }
    doc["checks"] = std::move(list);
    emit(out, doc);
  }
  return report.overall() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompositions of Fulton-MacPherson configuration spaces X[n]", "fmc"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"json", "text"};
  auto add_format = [&](CLI::App* sub, const std::vector<std::string>& allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };

  auto* nests = app.add_subcommand("nests", "Enumerate all nests of [n] with their statistics");
  nests->add_option("--n", o.n, "Number of labels")->required();
  nests->add_flag("--budget-override", o.budget_override, "Allow enumeration past n = 7");
  add_format(nests, formats);

  auto* hpoly = app.add_subcommand("h-poly", "Multiplicity polynomial h_n(x)");
  hpoly->add_option("--n", o.n, "Number of labels")->required();
  hpoly->add_option("--d", o.d, "Dimension of X")->required();
  add_format(hpoly, formats);

  auto* egf = app.add_subcommand("egf", "Solve the functional identity for N(x,t) up to t^n");
  egf->add_option("--n", o.n, "Truncation order")->required();
  egf->add_option("--d", o.d, "Dimension of X")->required();
  egf->add_flag("--verify", o.verify, "Check the identity residual and agreement with the recurrence");
  add_format(egf, formats);

  auto* mult = app.add_subcommand("mult", "Multiplicity table a_{m,i}");
  mult->add_option("--n", o.n, "Number of labels")->required();
  mult->add_option("--d", o.d, "Dimension of X")->required();
  add_format(mult, formats);

  auto* dec = app.add_subcommand("decompose", "Decompose a theory of X[n] into shifted copies of X^m");
  dec->add_option("--theory", o.theory, "lawson, chow, db or betti")
      ->check(CLI::IsMember({"lawson", "chow", "db", "betti"}))
      ->capture_default_str();
  dec->add_option("--n", o.n, "Number of labels")->required();
  dec->add_option("--d", o.d, "Dimension of X (defaults to the space dimension)");
  dec->add_option("--p", o.p, "Outer level p");
  dec->add_option("--k", o.k, "Outer degree k");
  dec->add_option("--space", o.space, "Space descriptor file, or builtin:point|P1|P2|P<a>");
  dec->add_option("--mode", o.mode, "formal or ranks")->check(CLI::IsMember({"formal", "ranks"}))->capture_default_str();
  add_format(dec, {"json", "text", "latex"});

  auto* ver = app.add_subcommand("verify", "Run the oracle suite");
  ver->add_option("--max-n", o.max_n, "Largest label count")->capture_default_str();
  ver->add_option("--max-d", o.max_d, "Largest dimension")->capture_default_str();
  ver->add_flag("--budget-override", o.budget_override, "Allow enumeration past n = 7");
  add_format(ver, formats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fmc: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (nests->parsed()) return cmd_nests(o, out);
    if (hpoly->parsed()) return cmd_hpoly(o, out);
    if (egf->parsed()) return cmd_egf(o, out);
    if (mult->parsed()) return cmd_mult(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "fmc: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace fmc::cli
