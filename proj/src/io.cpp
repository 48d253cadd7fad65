#include "limhodge/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

i64 lattice_coord(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "not an integer (coordinates must be lattice points)");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<i64>::max()))
    fail(where, "out of range");
  const i64 x = v.get<i64>();
  if (x >= (i64{1} << 40) || x <= -(i64{1} << 40)) fail(where, "coordinate too large");
  return x;
}

IVec vector_of(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of integers");
  if (static_cast<int>(v.size()) != dim)
    fail(where, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  IVec x;
  for (std::size_t i = 0; i < v.size(); ++i) x.push_back(lattice_coord(v[i], where + "[" + std::to_string(i) + "]"));
  return x;
}

Rational height_of(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(where, "height must be an integer or a string \"p/q\"");
  Rational r;
  if (r.set_str(v.get<std::string>(), 10) != 0 || r.get_den() == 0) fail(where, "bad rational \"" + v.get<std::string>() + "\"");
  r.canonicalize();
  return r;
}

std::vector<IVec> cone_of(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) fail(where, "a cone is a list of rays");
  std::vector<IVec> rays;
  for (std::size_t i = 0; i < v.size(); ++i) rays.push_back(vector_of(v[i], dim, where + "[" + std::to_string(i) + "]"));
  return rays;
}

ConeInput cones_of(const json& v, int dim, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of cones");
  ConeInput out;
  bool with_sigma = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (v[i].is_object()) {
      if (!v[i].contains("rays")) fail(at, "missing \"rays\"");
      out.cones.push_back(cone_of(v[i]["rays"], dim, at + ".rays"));
      if (v[i].contains("sigma")) {
        if (!v[i]["sigma"].is_number_integer()) fail(at + ".sigma", "not an integer");
        if (i > 0 && !with_sigma) fail(at + ".sigma", "sigma must be given for every cone or none");
        with_sigma = true;
        out.sigma.push_back(v[i]["sigma"].get<int>());
      } else if (with_sigma) {
        fail(at, "sigma must be given for every cone or none");
      }
    } else {
      if (with_sigma) fail(at, "sigma must be given for every cone or none");
      out.cones.push_back(cone_of(v[i], dim, at));
    }
  }
  return out;
}

}  // namespace

ParsedInput parse_input(const json& j) {
  if (!j.is_object()) fail("input", "expected a JSON object");
  ParsedInput in;
  if (!j.contains("dim")) fail("dim", "missing");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1 || j["dim"].get<long>() > 8)
    fail("dim", "must be an integer between 1 and 8");
  in.dim = j["dim"].get<int>();
  if (!j.contains("points")) fail("points", "missing");
  const json& pts = j["points"];
  if (!pts.is_array() || pts.empty()) fail("points", "expected a nonempty list");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string at = "points[" + std::to_string(i) + "]";
    HeightPoint h;
    if (pts[i].is_array()) {
      h.coords = vector_of(pts[i], in.dim, at);
    } else if (pts[i].is_object()) {
      if (!pts[i].contains("coords")) fail(at, "missing \"coords\"");
      h.coords = vector_of(pts[i]["coords"], in.dim, at + ".coords");
      if (pts[i].contains("height")) h.height = height_of(pts[i]["height"], at + ".height");
    } else {
      fail(at, "expected {\"coords\": [...]} or a list of integers");
    }
    in.points.push_back(std::move(h));
  }
  for (const auto& [key, value] : j.items())
    if (key != "dim" && key != "points" && key != "subfan" && key != "refinement" && key != "name")
      fail(key, "unknown field");
  if (j.contains("subfan")) in.subfan = cones_of(j["subfan"], in.dim, "subfan");
  if (j.contains("refinement")) in.refinement = cones_of(j["refinement"], in.dim, "refinement");
  return in;
}

ParsedInput parse_input_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw InputError("line " + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  return parse_input(j);
}

ConeInput parse_refinement(const json& j) {
  const json& cones = j.is_object() && j.contains("refinement") ? j["refinement"] : j;
  if (!cones.is_array() || cones.empty()) fail("refinement", "expected a nonempty list of cones");
  // Dimension from the first ray found.
  int dim = -1;
  for (const auto& c : cones) {
    const json& rays = c.is_object() ? c.value("rays", json::array()) : c;
    if (rays.is_array() && !rays.empty() && rays[0].is_array()) {
      dim = static_cast<int>(rays[0].size());
      break;
    }
  }
  if (dim < 1) fail("refinement", "no rays given");
  return cones_of(cones, dim, "refinement");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError(path + ": cannot open");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Subdivision build_subdivision(const ParsedInput& in) { return regular_subdivision(in.points); }

}  // namespace limhodge
