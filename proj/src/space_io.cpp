#include "looptor/space_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "looptor/builtins.hpp"
#include "looptor/error.hpp"

namespace looptor {

using nlohmann::json;

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InputError("missing parameters for " + std::string(what));
  return out;
}

}  // namespace

SimplicialSetDesc parse_space_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw InputError("space description must be a JSON object");
  SimplicialSetDesc d;
  try {
    const json& gens = j.at("generators");
    if (!gens.is_object()) throw InputError("'generators' must map dimensions to id lists");
    std::vector<std::pair<int, std::vector<std::string>>> by_dim;
    for (auto it = gens.begin(); it != gens.end(); ++it)
      by_dim.emplace_back(parse_int(it.key(), "generator dimension"), it.value().get<std::vector<std::string>>());
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [dim, ids] : by_dim)
      for (const auto& id : ids) d.generators.emplace_back(id, dim);

    if (j.contains("faces")) {
      for (auto it = j["faces"].begin(); it != j["faces"].end(); ++it) {
        auto& entries = d.faces[it.key()];
        for (const json& e : it.value()) {
          if (!e.is_array() || e.size() != 2)
            throw InputError("face entry of '" + it.key() + "' must be [deg_word, generator]");
          entries.push_back({e[0].get<std::vector<int>>(), e[1].get<std::string>()});
        }
      }
    }
    if (j.contains("basepoint")) d.basepoint = j["basepoint"].get<std::string>();

    if (j.contains("dimensions")) {
      auto declared = j["dimensions"].get<std::vector<int>>();
      std::vector<int> counts;
      for (const auto& [name, dim] : d.generators) {
        if (static_cast<int>(counts.size()) <= dim) counts.resize(dim + 1, 0);
        ++counts[dim];
      }
      if (declared != counts) throw InputError("'dimensions' does not match the generator lists");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid space description: ") + e.what());
  }
  return d;
}

std::string space_to_json(const SimplicialSet& X) {
  SimplicialSetDesc d = X.describe();
  json j;
  json gens = json::object();
  for (const auto& [name, dim] : d.generators) gens[std::to_string(dim)].push_back(name);
  j["dimensions"] = X.counts();
  j["generators"] = gens;
  json faces = json::object();
  for (const auto& [name, entries] : d.faces) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(json::array({e.degeneracies, e.generator}));
    faces[name] = arr;
  }
  j["faces"] = faces;
  j["basepoint"] = d.basepoint;
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialSet builtin_space(std::string_view name) {
  std::string_view head = name;
  std::string_view params;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    head = name.substr(0, colon);
    params = name.substr(colon + 1);
  }
  if (head == "sphere") return sphere(parse_int(params, "sphere"));
  if (head == "circle") return circle();
  if (head == "point") return point();
  if (head == "wedge") return wedge_of_spheres(parse_int_list(params, "wedge"));
  if (head == "reduced-simplex") return reduced_simplex(parse_int(params, "reduced-simplex"));
  if (head == "collapsed-simplex") return collapsed_simplex(parse_int(params, "collapsed-simplex"));
  if (head == "simplex") return standard_simplex(parse_int(params, "simplex"));
  throw InputError("unknown builtin space '" + std::string(name) + "'");
}

SimplicialSet load_space(const std::string& spec) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return builtin_space(std::string_view(spec).substr(prefix.size()));
  return SimplicialSet::load(parse_space_json(read_text_file(spec)));
}

}  // namespace looptor
