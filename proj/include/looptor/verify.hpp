#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "looptor/simplicial.hpp"
#include "looptor/twisted.hpp"

namespace looptor {

/// One identity family: how many instances were checked and the first counterexample.
struct CheckResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  std::string counterexample;

  /// Records one instance; `detail` is evaluated only for the first failure.
  void expect(bool ok, const std::function<std::string()>& detail);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// A base space with a cyclic structure group, a fiber and a twisting function.
struct TwistedSetup {
  const SimplicialSet* base = nullptr;
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<GroupAction> action;
  std::unique_ptr<TwistingFunction> twist;
};

/// Cyclic group of order m acting regularly; edges [a,b] of a reduced simplex get c_b - c_a
/// with c_k = k, other edges the generator. Falls back to the trivial twist when those values
/// break the axioms.
TwistedSetup default_setup(const SimplicialSet& X, int m);

SuiteReport verify_prisms(const SimplicialSet& X, int max_dim, std::uint64_t seed = 1);
SuiteReport verify_conventions(const SimplicialSet& X, int max_dim, int cases = 1000, std::uint64_t seed = 1);
SuiteReport verify_twisting(const SimplicialSet& X, int max_dim);
SuiteReport verify_cobar(const SimplicialSet& X, int max_degree, std::uint64_t seed = 1);
/// Psi on the standard simplices up to max_dim and on the twisted setup over X (total degree
/// <= max_dim), plus the low-dimensional closed formulas.
SuiteReport verify_psi(const TwistedSetup& setup, int max_dim, std::uint64_t seed = 1);
SuiteReport verify_psi(const SimplicialSet& X, int max_dim, std::uint64_t seed = 1);

/// Expected Psi(i_n (x) 1) for n = 1, 2, 3 in format_universal's rendering.
std::vector<std::string> expected_psi_terms(int n);

/// Runs the tasks on worker threads and concatenates their results in task order.
std::vector<CheckResult> run_checks(const std::vector<std::function<std::vector<CheckResult>()>>& tasks);

}  // namespace looptor
