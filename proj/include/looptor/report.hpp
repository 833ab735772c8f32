#pragma once

#include <string>
#include <utility>
#include <vector>

#include "looptor/homology.hpp"
#include "looptor/verify.hpp"

namespace looptor {

inline constexpr const char* kReportSchema = "looptor.report/1";

/// Result of one command. Only `elapsed_ms` varies between identical runs.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<SuiteReport> suites;
  std::vector<std::pair<std::string, std::vector<HomologyGroup>>> homology;
  std::vector<std::string> notes;
  bool pass = true;
  double elapsed_ms = 0;

  bool passed() const;
};

std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace looptor
