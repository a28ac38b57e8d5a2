// Acceptance suite: one PASS/FAIL line per criterion, each with a time limit.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "fmc/cli.hpp"
#include "fmc/genfun.hpp"
#include "fmc/nests.hpp"
#include "fmc/oracle.hpp"
#include "fmc/theory.hpp"
#include "json_util.hpp"

using namespace fmc;

namespace {

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<std::string()> body;  // empty string on success, else a reason
};

std::string x2_terms() {
  for (int d = 1; d <= 5; ++d) {
    std::ostringstream out, err;
    const int code = cli::run({"decompose", "--theory", "lawson", "--mode", "formal", "--n", "2", "--d",
                               std::to_string(d)},
                              out, err);
    if (code != 0) return "exit " + std::to_string(code) + " for d=" + std::to_string(d);
    const auto doc = detail::Json::parse(out.str());
    std::vector<DecompositionTerm> got;
    for (const auto& t : doc["terms"]) got.push_back({t["m"].get<int>(), t["shift"].get<int>(), t["mult"].get<int>()});
    std::vector<DecompositionTerm> expected{{2, 0, 1}};
    for (int j = 1; j <= d - 1; ++j) expected.push_back({1, j, 1});
    if (got != expected) return "term set differs for d=" + std::to_string(d);
  }
  return {};
}

std::string x3_terms() {
  for (int d = 2; d <= 5; ++d) {
    const auto dec = decompose_formal(3, d);
    for (int j = 1; j <= 2 * d - 1; ++j) {
      BigInt x1 = 0, x2 = 0;
      for (const auto& t : dec.terms) {
        if (t.shift == j && t.m == 1) x1 = t.mult;
        if (t.shift == j && t.m == 2) x2 = t.mult;
      }
      if (x1 != std::min(3 * j - 2, 6 * d - 3 * j - 2)) return "X-term mismatch at d=" + std::to_string(d);
      if (x2 != (j <= d - 1 ? 3 : 0)) return "X^2-term mismatch at d=" + std::to_string(d);
    }
    for (const auto& t : dec.terms) {
      if (t.m == 3 && (t.shift != 0 || t.mult != 1)) return "X^3-term mismatch at d=" + std::to_string(d);
    }
  }
  return {};
}

std::string three_way() {
  if (enumerate_nests(5).empty()) return "no nests of [5]";
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 5; ++n) {
      const auto r = three_way_check(n, d);
      if (!r.pass) return r.parameters + ": " + r.detail;
      const auto b = brute_equiv(n, d);
      if (!b.pass) return b.parameters + ": " + b.detail;
    }
  }
  return {};
}

std::string identity() {
  for (int d = 1; d <= 4; ++d) {
    const auto r = identity_check(8, d);
    if (!r.pass) return r.parameters + ": " + r.detail;
  }
  return {};
}

std::string blowups() {
  for (int d = 1; d <= 5; ++d) {
    const auto r = x2_blowup_check(d);
    if (!r.pass) return r.parameters + ": " + r.detail;
  }
  for (int d = 2; d <= 5; ++d) {
    const auto r = x3_check(d);
    if (!r.pass) return r.parameters + ": " + r.detail;
  }
  return {};
}

std::string betti() {
  // (1+q^2+q^4)^2 + q^2(1+q^2+q^4), expanded by hand.
  const IntPoly expected{1, 0, 3, 0, 4, 0, 3, 0, 1};
  if (betti_of_fm(IntPoly{1, 0, 1, 0, 1}, 2, 2) != expected) return "P2[2] Poincare polynomial differs";
  const std::vector<std::pair<int, IntPoly>> inputs{
      {1, IntPoly{1, 0, 1}},         {1, IntPoly{1, 2, 1}},       {1, IntPoly{1, 8, 1}},
      {2, IntPoly{1, 0, 1, 0, 1}},   {2, IntPoly{1, 4, 22, 4, 1}}, {2, IntPoly{2, 0, 3, 0, 2}},
      {3, IntPoly{1, 0, 1, 0, 1, 0, 1}}, {3, IntPoly{1, 2, 3, 4, 3, 2, 1}}};
  for (const auto& [d, p] : inputs) {
    for (int n = 1; n <= 4; ++n) {
      const auto r = palindrome_check(p, d, n);
      if (!r.pass) return r.parameters + ": " + r.detail;
    }
  }
  return {};
}

std::string structure() {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      const auto r = structure_check(n, d);
      if (!r.pass) return r.parameters + ": " + r.detail;
    }
  }
  return {};
}

std::string lawson_spot() {
  const SpaceDescriptor p2 = builtin_space("P2", Theory::lawson, 2);
  const GradedTable point = [] {
    GradedTable t(Theory::lawson);
    t.set({0, 0}, GroupDescriptor::free(1));
    return t;
  }();
  // P2 x P2 as a trivial P2-bundle over P2, P2 as a P2-bundle over the point.
  const GradedTable p2_from_point = proj_bundle_table(point, 3, 4);
  const GradedTable p2sq = proj_bundle_table(p2_from_point, 3, 8);
  if (p2.power_table(1) != p2_from_point || p2.power_table(2) != p2sq) return "built-in tables differ from the bundle formula";
  const auto g = evaluate_decomposition(decompose_formal(2, 2), p2, Theory::lawson, {1, 2});
  if (g != GroupDescriptor::free(3)) return "L_1H_2(P2[2]) = " + to_string(g);
  return {};
}

std::string cli_contract() {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  auto invoke = [](const std::vector<std::string>& args, std::string& out_text) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    out_text = out.str();
    return code;
  };
  std::string out;
  if (invoke({"h-poly", "--n", "3", "--d", "2", "--format", "json"}, out) != 0 ||
      out != "{\"n\":3,\"d\":2,\"coeffs\":[0,1,4,1]}\n")
    return "h-poly example";
  if (invoke({"verify", "--max-n", "4", "--max-d", "2"}, out) != 0) return "verify example exit code";
  if (detail::Json::parse(out)["overall"] != true) return "verify example report";
  std::string dummy;
  if (invoke({"nests", "--n", "0"}, dummy) != 2) return "nests --n 0 exit code";

  const std::vector<std::vector<std::string>> docs{
      {"h-poly", "--n", "3", "--d", "2", "--format", "json"},
      {"verify", "--max-n", "4", "--max-d", "2"},
      {"nests", "--n", "4"},
      {"egf", "--n", "6", "--d", "3", "--verify"},
      {"mult", "--n", "5", "--d", "2"},
      {"h-poly", "--n", "14", "--d", "4"},
      {"decompose", "--theory", "db", "--n", "3", "--d", "2", "--p", "0", "--k", "4"},
      {"decompose", "--theory", "lawson", "--n", "2", "--space", "builtin:P2", "--mode", "ranks"},
      {"decompose", "--theory", "chow", "--n", "3", "--space", "builtin:P1", "--mode", "ranks"},
      {"decompose", "--theory", "betti", "--n", "3", "--space", "builtin:P2", "--mode", "ranks"},
  };
  for (const auto& args : docs) {
    if (invoke(args, out) != 0) return "exit code of " + args.front();
    if (out.empty() || out.back() != '\n') return "missing newline in " + args.front();
    const std::string body = out.substr(0, out.size() - 1);
    if (detail::Json::parse(body).dump() != body) return "round trip of " + args.front();
    std::string again;
    invoke(args, again);
    if (again != out) return "nondeterministic " + args.front();
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "X[2] Lawson formal terms, D = 1..5", 1.0, x2_terms},
      {"AC2", "X[3] multiplicities, D = 2..5", 1.0, x3_terms},
      {"AC3", "recurrence = EGF solver = nest sum, n <= 5, d <= 3", 30.0, three_way},
      {"AC4", "functional identity residual zero to t^8, d = 1..4", 5.0, identity},
      {"AC5", "blowup reconstructions of X[2] and X[3], d <= 5", 1.0, blowups},
      {"AC6", "Betti numbers of P2[2] and palindromy, d <= 3, n <= 4", 5.0, betti},
      {"AC7", "structural invariants, n <= 6, d <= 4", 60.0, structure},
      {"AC8", "L_1H_2(P2[2]) has free rank 3", 1.0, lawson_spot},
      {"AC9", "CLI examples and JSON round trips", 60.0, cli_contract},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = c.body();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > c.limit_seconds) reason = "over the time limit";
    const bool pass = reason.empty();
    failures += !pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds << " s)";
    if (!pass) std::cout << ": " << reason;
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
