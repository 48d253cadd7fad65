#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "limhodge/polytope.hpp"
#include "limhodge/subdivision.hpp"

namespace limhodge {

/// Cones of a fan as lists of ray vectors, with optional sigma indices into
/// the truncated normal fan.
struct ConeInput {
  std::vector<std::vector<IVec>> cones;
  std::vector<int> sigma;
};

/// A parsed input file:
///   {"dim": n,
///    "points": [{"coords": [ints], "height": "p/q" | int}, ...],
///    "subfan": [[ray, ...], ...],
///    "refinement": [{"rays": [ray, ...], "sigma": k}, ...]}
/// Heights default to 0, so a file without heights gives the trivial
/// subdivision of the hull of its points.
struct ParsedInput {
  int dim = 0;
  std::vector<HeightPoint> points;
  std::optional<ConeInput> subfan;
  std::optional<ConeInput> refinement;
};

/// Throws InputError naming the offending field, e.g. "points[2].coords[0]".
ParsedInput parse_input(const nlohmann::json& j);
ParsedInput parse_input_text(const std::string& text);
/// Reads only the "refinement" member (or a bare cone list) of a file.
ConeInput parse_refinement(const nlohmann::json& j);

std::string read_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Heights to a subdivision (trivial when every height is equal).
Subdivision build_subdivision(const ParsedInput& in);

}  // namespace limhodge
