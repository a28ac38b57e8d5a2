#include "fmc/space_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace fmc {

using detail::Json;

namespace {

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(where + ": unknown field '" + key + "'");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

int small_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + ": expected an integer");
  const long long v = j.get<long long>();
  if (v < -1000000 || v > 1000000) throw ParseError(what + ": out of range");
  return static_cast<int>(v);
}

GradedTable parse_table(const Json& j, Theory kind, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of records");
  GradedTable table(kind);
  std::set<Index> seen;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& rec = j[r];
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!rec.is_object()) throw ParseError(at + ": expected an object");
    reject_unknown(rec, {"p", "k", "free_rank", "torsion"}, at);
    Index idx;
    if (kind == Theory::chow) {
      idx.p = small_int(require(rec, "p", at), at + ".p");
      if (rec.contains("k")) small_int(rec["k"], at + ".k");
    } else {
      idx.p = small_int(require(rec, "p", at), at + ".p");
      idx.k = small_int(require(rec, "k", at), at + ".k");
    }
    idx = normalize_index(kind, idx);
    if (!seen.insert(idx).second) throw ParseError(at + ": duplicate index");
    const BigInt rank = detail::big_from_json(require(rec, "free_rank", at), at + ".free_rank");
    std::vector<BigInt> torsion;
    if (rec.contains("torsion")) {
      if (!rec["torsion"].is_array()) throw ParseError(at + ".torsion: expected a list");
      for (const auto& q : rec["torsion"]) torsion.push_back(detail::big_from_json(q, at + ".torsion"));
    }
    try {
      table.set(idx, GroupDescriptor::make(rank, torsion));
    } catch (const InvalidArgument& e) {
      throw ParseError(at + ": " + e.what());
    }
  }
  return table;
}

Json table_to_json(const GradedTable& t) {
  Json arr = Json::array();
  for (const auto& [idx, g] : t.entries()) {
    if (g.is_formal()) throw InvalidArgument("formal groups cannot be serialized in a descriptor");
    Json rec = Json::object();
    rec["p"] = idx.p;
    rec["k"] = idx.k;
    rec["free_rank"] = detail::big_to_json(g.free_rank());
    Json tors = Json::array();
    for (const auto& [q, c] : g.torsion()) {
      for (BigInt i = 0; i < c; ++i) tors.push_back(detail::big_to_json(q));
    }
    rec["torsion"] = std::move(tors);
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace

SpaceDescriptor parse_space(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("space descriptor is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("space descriptor must be a JSON object");
  reject_unknown(doc, {"name", "dim", "kind", "betti", "table", "powers"}, "descriptor");

  SpaceDescriptor s;
  const Json& name = require(doc, "name", "descriptor");
  if (!name.is_string()) throw ParseError("descriptor.name: expected a string");
  s.name = name.get<std::string>();
  s.dim = small_int(require(doc, "dim", "descriptor"), "descriptor.dim");
  const Json& kind = require(doc, "kind", "descriptor");
  if (!kind.is_string()) throw ParseError("descriptor.kind: expected a string");
  try {
    s.kind = parse_theory(kind.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("descriptor.kind: ") + e.what());
  }

  if (doc.contains("betti")) {
    const Json& b = doc["betti"];
    if (!b.is_array()) throw ParseError("descriptor.betti: expected a list of coefficients");
    std::vector<BigInt> c;
    for (const auto& v : b) c.push_back(detail::big_from_json(v, "descriptor.betti"));
    s.betti = IntPoly(std::move(c));
  }
  if (doc.contains("table")) s.table = parse_table(doc["table"], s.kind, "descriptor.table");
  if (doc.contains("powers")) {
    const Json& pw = doc["powers"];
    if (!pw.is_object()) throw ParseError("descriptor.powers: expected an object keyed by power");
    for (const auto& [key, value] : pw.items()) {
      int m = 0;
      try {
        std::size_t used = 0;
        m = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("descriptor.powers: key '" + key + "' is not an integer");
      }
      if (!s.powers.emplace(m, parse_table(value, s.kind, "descriptor.powers." + key)).second) {
        throw ParseError("descriptor.powers: duplicate power " + key);
      }
    }
  }
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
  return s;
}

SpaceDescriptor load_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open space descriptor '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

std::string space_to_json(const SpaceDescriptor& space) {
  Json doc = Json::object();
  doc["name"] = space.name;
  doc["dim"] = space.dim;
  doc["kind"] = std::string(theory_name(space.kind));
  if (space.betti) doc["betti"] = detail::poly_to_json(*space.betti);
  if (space.table) doc["table"] = table_to_json(*space.table);
  if (!space.powers.empty()) {
    Json pw = Json::object();
    for (const auto& [m, t] : space.powers) pw[std::to_string(m)] = table_to_json(t);
    doc["powers"] = std::move(pw);
  }
  return doc.dump();
}

}  // namespace fmc
