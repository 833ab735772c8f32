#include "looptor/inputs.hpp"

#include <charconv>

#include <json.hpp>

#include "looptor/error.hpp"
#include "looptor/space_io.hpp"

namespace looptor {

using nlohmann::json;

namespace {

constexpr std::string_view kBuiltin = "builtin:";

json parse_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

int parse_count(std::string_view s, const std::string& spec) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1) throw InputError("bad count in '" + spec + "'");
  return v;
}

GenId generator(const SimplicialSet& X, const std::string& name) {
  auto g = X.find(name);
  if (!g) throw InputError("unknown generator '" + name + "'");
  return *g;
}

}  // namespace

FiniteGroup load_group(const std::string& spec) {
  std::string_view s = spec;
  if (s.starts_with(kBuiltin)) {
    s.remove_prefix(kBuiltin.size());
    if (s.starts_with("cyclic:")) return FiniteGroup::cyclic(parse_count(s.substr(7), spec));
    throw InputError("unknown builtin group '" + spec + "'");
  }
  json j = parse_file(spec);
  try {
    return FiniteGroup::from_table(j.at("elements").get<std::vector<std::string>>(),
                                   j.at("table").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw InputError(spec + ": " + e.what());
  }
}

GroupAction load_fiber(const std::string& spec, const FiniteGroup& group) {
  std::string_view s = spec;
  if (s.starts_with(kBuiltin)) {
    s.remove_prefix(kBuiltin.size());
    if (s == "regular") return GroupAction::regular(group);
    if (s.starts_with("points:")) {
      int k = parse_count(s.substr(7), spec);
      SimplicialSetDesc d;
      for (int i = 0; i < k; ++i) d.generators.emplace_back("p" + std::to_string(i), 0);
      return GroupAction::trivial(SimplicialSet::load(d), group);
    }
    throw InputError("unknown builtin fiber '" + spec + "'");
  }
  json j = parse_file(spec);
  try {
    const json& sp = j.at("space");
    SimplicialSet Z = sp.is_string() ? load_space(sp.get<std::string>()) : SimplicialSet::load(parse_space_json(sp.dump()));
    std::vector<std::vector<GenId>> images(group.order());
    for (int a = 0; a < group.order(); ++a) {
      images[a].resize(Z.num_generators());
      for (GenId g = 0; g < Z.num_generators(); ++g) images[a][g] = g;
    }
    if (j.contains("action"))
      for (auto it = j["action"].begin(); it != j["action"].end(); ++it) {
        GroupElement a = group.find(it.key());
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
          images[a][generator(Z, jt.key())] = generator(Z, jt.value().get<std::string>());
      }
    return GroupAction(std::move(Z), group, std::move(images));
  } catch (const json::exception& e) {
    throw InputError(spec + ": " + e.what());
  }
}

TwistingFunction load_twist(const std::string& spec, const SimplicialSet& X, const FiniteGroup& group) {
  std::map<GenId, GroupElement> given;
  if (spec == "builtin:trivial") return TwistingFunction::from_values(X, group, given);
  if (spec == "builtin:generator") {
    if (group.order() < 2) return TwistingFunction::from_values(X, group, given);
    for (GenId g : X.generators(1)) given[g] = 1;
    return TwistingFunction::from_values(X, group, given);
  }
  if (std::string_view(spec).starts_with(kBuiltin)) throw InputError("unknown builtin twist '" + spec + "'");
  json j = parse_file(spec);
  if (!j.is_object()) throw InputError(spec + ": twist must map generators to elements");
  try {
    for (auto it = j.begin(); it != j.end(); ++it) given[generator(X, it.key())] = group.find(it.value().get<std::string>());
  } catch (const json::exception& e) {
    throw InputError(spec + ": " + e.what());
  }
  return TwistingFunction::from_values(X, group, given);
}

}  // namespace looptor
