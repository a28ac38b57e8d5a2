#pragma once

#include <limits>
#include <string>

#include <json.hpp>

#include "fmc/errors.hpp"
#include "fmc/polyseries.hpp"

namespace fmc::detail {

using Json = nlohmann::ordered_json;

// Values inside the signed 64-bit range are plain JSON integers; anything
// larger is written as a decimal string so no reader ever rounds it.
inline Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return Json(v.convert_to<long long>());
  }
  return Json(v.str());
}

inline BigInt big_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>()) : BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return BigInt(s);
  }
  throw ParseError(what + ": expected an integer or a decimal string");
}

inline Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(big_to_json(c));
  return arr;
}

}  // namespace fmc::detail
