#include "looptor/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace looptor {

bool Report::passed() const {
  return pass && std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

namespace {

nlohmann::ordered_json group_json(const HomologyGroup& h) {
  return {{"betti", h.betti}, {"torsion", h.torsion}, {"group", h.to_string()}};
}

}  // namespace

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  j["status"] = r.passed() ? "pass" : "fail";
  if (!r.suites.empty()) {
    auto& suites = j["suites"] = nlohmann::ordered_json::array();
    for (const SuiteReport& s : r.suites) {
      nlohmann::ordered_json js{{"suite", s.suite}, {"status", s.passed() ? "pass" : "fail"}};
      auto& checks = js["checks"] = nlohmann::ordered_json::array();
      for (const CheckResult& c : s.checks) {
        nlohmann::ordered_json jc{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"cases", c.cases}};
        if (!c.passed) jc["counterexample"] = c.counterexample;
        checks.push_back(jc);
      }
      suites.push_back(js);
    }
  }
  if (!r.homology.empty()) {
    auto& tables = j["homology"] = nlohmann::ordered_json::object();
    for (const auto& [name, groups] : r.homology) {
      auto& t = tables[name] = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < groups.size(); ++k) {
        auto g = group_json(groups[k]);
        g["degree"] = k;
        t.push_back(g);
      }
    }
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.command << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.inputs) out << "  " << k << " = " << v << "\n";
  for (const SuiteReport& s : r.suites) {
    out << "[" << s.suite << "] " << (s.passed() ? "pass" : "fail") << "\n";
    for (const CheckResult& c : s.checks) {
      out << "  " << (c.passed ? "ok  " : "FAIL") << " " << c.name << " (" << c.cases << " cases)\n";
      if (!c.passed) out << "       " << c.counterexample << "\n";
    }
  }
  for (const auto& [name, groups] : r.homology) {
    out << name << ":\n";
    for (std::size_t k = 0; k < groups.size(); ++k) out << "  H_" << k << " = " << groups[k].to_string() << "\n";
  }
  for (const std::string& n : r.notes) out << n << "\n";
  out << "elapsed " << static_cast<long>(r.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace looptor
