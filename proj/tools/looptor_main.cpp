// looptor: loop-space homology and identity checks for finite simplicial sets.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "looptor/cobar.hpp"
#include "looptor/error.hpp"
#include "looptor/inputs.hpp"
#include "looptor/report.hpp"
#include "looptor/space_io.hpp"
#include "looptor/verify.hpp"

using namespace looptor;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

int emit(Report& r, const std::string& format, std::chrono::steady_clock::time_point start) {
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << (format == "json" ? render_json(r) : render_text(r));
  return r.passed() ? kPass : kFail;
}

Report loop_homology(const std::string& space, int max_degree) {
  SimplicialSet X = load_space(space);
  Report r;
  r.command = "loop-homology";
  r.inputs = {{"space", space}, {"max_degree", std::to_string(max_degree)}};
  r.homology.emplace_back("loop_space", Cobar(X).homology(max_degree));
  return r;
}

Report verify(const std::string& suite, const std::string& space, int max_dim) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", suite}, {"space", space}, {"max_dim", std::to_string(max_dim)}};
  std::optional<SimplicialSet> loaded;
  try {
    loaded = load_space(space);
  } catch (const SimplicialIdentityError& e) {
    // A broken face table is reported as a failing identity, not a usage error.
    CheckResult c{"face table satisfies the simplicial identities", false, 1, e.what()};
    r.suites.push_back({"space", {c}});
    return r;
  }
  const SimplicialSet& X = *loaded;
  bool all = suite == "all";
  if (all || suite == "prisms") r.suites.push_back(verify_prisms(X, max_dim));
  if (all || suite == "conventions") r.suites.push_back(verify_conventions(X, max_dim));
  if (all || suite == "twisting") r.suites.push_back(verify_twisting(X, max_dim + 1));
  if (all || suite == "cobar") r.suites.push_back(verify_cobar(X, max_dim));
  if (all || suite == "psi") r.suites.push_back(verify_psi(X, max_dim));
  return r;
}

Report compare_twisted(const std::string& base, const std::string& fiber, const std::string& group,
                       const std::string& twist, int max_degree) {
  SimplicialSet X = load_space(base);
  FiniteGroup g = load_group(group);
  GroupAction action = load_fiber(fiber, g);
  TwistingFunction tau = load_twist(twist, X, g);
  Report r;
  r.command = "compare-twisted";
  r.inputs = {{"base", base}, {"fiber", fiber}, {"group", group}, {"twist", twist}, {"max_degree", std::to_string(max_degree)}};
  CheckResult axioms{"twisting function axioms", true, 0, {}};
  for (const IdentityCheck& c : tau.check(std::min(max_degree + 1, X.max_dim() + 1)))
    axioms.expect(c.passed, [&] { return c.name + ": " + c.detail; });
  r.suites.push_back({"twist", {axioms}});
  if (!axioms.passed) return r;
  HomologyComparison cmp = compare_homology(tau, action, max_degree);
  r.homology.emplace_back("tensor", cmp.tensor);
  r.homology.emplace_back("cartesian", cmp.cartesian);
  std::string tensor, cart;
  for (std::size_t k = 0; k < cmp.tensor.size(); ++k) {
    tensor += (k ? "," : "") + ("(" + cmp.tensor[k].to_string() + ")");
    cart += (k ? "," : "") + ("(" + cmp.cartesian[k].to_string() + ")");
  }
  r.notes.push_back(cmp.equal() ? "EQUAL: " + tensor : "DIFFERENT: " + tensor + " vs " + cart);
  r.pass = cmp.equal();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loop-space homology and identity checks for finite simplicial sets"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* lh = app.add_subcommand("loop-homology", "Homology of the loop space via the cobar construction");
  std::string lh_space;
  int lh_max = 6;
  lh->add_option("--space", lh_space, "Space: builtin:<name> or a JSON file")->required();
  lh->add_option("--max-degree", lh_max, "Highest degree")->check(CLI::NonNegativeNumber);
  lh->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* vf = app.add_subcommand("verify", "Run an identity-checking suite");
  std::string vf_suite, vf_space;
  int vf_max = 4;
  vf->add_option("suite", vf_suite, "prisms|conventions|twisting|cobar|psi|all")
      ->required()
      ->check(CLI::IsMember({"prisms", "conventions", "twisting", "cobar", "psi", "all"}));
  vf->add_option("space", vf_space, "Space: builtin:<name> or a JSON file")->required();
  vf->add_option("--max-dim", vf_max, "Highest dimension checked (twisting also covers simplices one dimension up)")->check(CLI::Range(1, 6));
  vf->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* ct = app.add_subcommand("compare-twisted", "Compare twisted tensor and cartesian product homology");
  std::string ct_base, ct_fiber = "builtin:regular", ct_group, ct_twist = "builtin:trivial";
  int ct_max = 3;
  ct->add_option("--base", ct_base, "Base space")->required();
  ct->add_option("--fiber", ct_fiber, "Fiber with group action");
  ct->add_option("--group", ct_group, "Structure group")->required();
  ct->add_option("--twist", ct_twist, "Twisting function");
  ct->add_option("--max-degree", ct_max, "Highest degree")->check(CLI::NonNegativeNumber);
  ct->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    Report r;
    if (*lh) r = loop_homology(lh_space, lh_max);
    if (*vf) r = verify(vf_suite, vf_space, vf_max);
    if (*ct) r = compare_twisted(ct_base, ct_fiber, ct_group, ct_twist, ct_max);
    return emit(r, format, start);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
