#pragma once

// Space descriptor documents (JSON):
//
//   {"name": "P2", "dim": 2, "kind": "lawson",
//    "table": [{"p": 0, "k": 0, "free_rank": 1, "torsion": []}, ...],
//    "powers": {"2": [ ...records... ]}}
//
// or, for kind "betti", a "betti" list of coefficients low to high instead of
// "table". Integers may be given as JSON numbers or decimal strings. Unknown
// fields are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "fmc/theory.hpp"

namespace fmc {

/// Throws ParseError on malformed input.
SpaceDescriptor parse_space(std::string_view text);
SpaceDescriptor load_space(const std::filesystem::path& path);

/// Compact canonical serialization accepted by parse_space.
std::string space_to_json(const SpaceDescriptor& space);

}  // namespace fmc
