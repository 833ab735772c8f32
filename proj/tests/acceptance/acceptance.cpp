// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "looptor/builtins.hpp"
#include "looptor/cobar.hpp"
#include "looptor/homology.hpp"
#include "looptor/prism.hpp"
#include "looptor/psi.hpp"
#include "looptor/twisted.hpp"
#include "looptor/verify.hpp"
#include "../support/oracles.hpp"

using namespace looptor;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const SuiteReport& r) {
    for (const CheckResult& c : r.checks) require(c.passed, r.suite + ": " + c.name + ": " + c.counterexample);
  }
};

std::vector<std::string> golden(int n) {
  std::ifstream in(std::string(LOOPTOR_GOLDEN_DIR) + "/psi_dim" + std::to_string(n) + ".txt");
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

// Spaces named by the criteria.
std::vector<std::pair<std::string, SimplicialSet>> corpus() {
  std::vector<std::pair<std::string, SimplicialSet>> out;
  out.emplace_back("sphere:2", sphere(2));
  out.emplace_back("sphere:3", sphere(3));
  out.emplace_back("sphere:4", sphere(4));
  out.emplace_back("wedge:2,2", wedge_of_spheres({2, 2}));
  out.emplace_back("reduced-simplex:3", reduced_simplex(3));
  out.emplace_back("circle", circle());
  return out;
}

Outcome loop_homology_of_spheres() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    SimplicialSet S = sphere(n + 1);
    auto H = Cobar(S).homology(8);
    for (int k = 0; k <= 8; ++k)
      o.require(H[k] == HomologyGroup{k % n == 0 ? 1 : 0, {}},
                "sphere " + std::to_string(n + 1) + " degree " + std::to_string(k) + ": " + H[k].to_string());
  }
  return o;
}

Outcome boundaries_square_to_zero() {
  Outcome o;
  for (auto& [name, X] : corpus()) {
    Cobar C(X);
    std::optional<int> cap;
    if (C.has_degree_zero_generators()) cap = 4;
    for (int k = 0; k <= 6; ++k)
      for (const CobarMonomial& m : C.basis(k, cap)) o.require(C.diff(C.diff(m)).empty(), name + " cobar " + C.to_string(m));
    for (int m = 1; m <= 5; ++m) {
      TwistedSetup s = default_setup(X, m);
      TwistedTensorProduct tt(*s.twist, *s.action);
      TwistedCartesianProduct tcp(*s.twist, *s.action);
      for (int k = 0; k <= 5; ++k) {
        for (const SimplexPair& p : tt.basis(k)) o.require(tt.diff(tt.diff(p)).empty(), name + " tensor");
        for (const SimplexPair& p : tcp.basis(k)) o.require(tcp.diff(tcp.diff(p)).empty(), name + " cartesian");
      }
    }
  }
  return o;
}

Outcome twisting_cochain_identities() {
  Outcome o;
  auto spaces = corpus();
  spaces.emplace_back("sphere:5", sphere(5));
  spaces.emplace_back("reduced-simplex:5", reduced_simplex(5));
  spaces.emplace_back("collapsed-simplex:4", collapsed_simplex(4));
  for (auto& [name, X] : spaces) {
    SuiteReport r = verify_twisting(X, 5);
    r.suite = name;
    o.require(r);
    for (const char* fam : {"interior faces of Tcx vanish", "d_0 Tcx is the product formula", "d_n Tcx is the face formula"})
      if (X.max_dim() >= 3)
        o.require(std::any_of(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == fam && c.cases > 0; }),
                  name + ": no cases for " + fam);
  }
  return o;
}

Outcome golden_formulas() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const UniversalSimplex& u = universal_simplex(n);
    auto got = format_universal(u, psi_universal(n));
    std::sort(got.begin(), got.end());
    auto want = expected_psi_terms(n);
    std::sort(want.begin(), want.end());
    o.require(got == want, "dimension " + std::to_string(n) + " differs from the displayed formula");
    o.require(got == golden(n), "dimension " + std::to_string(n) + " differs from the golden file");
  }
  // The same terms on the top cell of the reduced 3-simplex, built directly from vertex lists.
  SimplicialSet X = reduced_simplex(3);
  LoopGroup G(X, Convention::A2B1);
  PrincipalComplex P(G);
  SimplexRef x = X.generator(*X.find("[0,1,2,3]"));
  auto el = [&](std::vector<int> base, std::vector<std::vector<int>> letters) {
    std::vector<Letter> ls;
    for (auto& l : letters) ls.push_back({X.apply_map(x, l), 1});
    return PrincipalElement{X.apply_map(x, base), G.reduce(3, ls)};
  };
  PrincipalChain want;
  want.add(el({0, 1, 2, 3}, {}), 1);
  want.add(el({0, 1, 1, 2}, {{0, 1, 2, 2, 3}}), 1);
  want.add(el({0, 0, 1, 1}, {{0, 1, 1, 1, 2}, {0, 1, 1, 2, 3}}), -1);
  want.add(el({0, 0, 0, 1}, {{0, 1, 1, 1, 2}, {0, 1, 2, 2, 3}}), 1);
  want.add(el({0, 0, 1, 2}, {{0, 2, 2, 2, 3}}), -1);
  want.add(el({0, 0, 0, 1}, {{0, 0, 1, 1, 2}, {0, 2, 2, 2, 3}}), -1);
  o.require(psi_unit(P, x) == want, "psi_unit on the reduced 3-simplex");
  return o;
}

Outcome psi_chain_map() {
  Outcome o;
  for (auto& [name, X] : corpus()) {
    SuiteReport r = verify_psi(X, 4);
    r.suite = name;
    o.require(r);
  }
  for (int m = 1; m <= 5; ++m) {
    SimplicialSet S = circle();
    TwistedSetup s = default_setup(S, m);
    SuiteReport r = verify_psi(s, 4);
    r.suite = "circle x cyclic " + std::to_string(m);
    o.require(r);
  }
  return o;
}

Outcome quasi_isomorphisms() {
  Outcome o;
  // Trivial twists against the Kunneth formula of the factors.
  for (auto& [name, X] : corpus()) {
    FiniteGroup g = FiniteGroup::cyclic(2);
    std::vector<GroupAction> fibers;
    fibers.push_back(GroupAction::regular(g));
    fibers.push_back(GroupAction::trivial(sphere(2), g));
    fibers.push_back(GroupAction::trivial(wedge_of_spheres({1, 1}), g));
    for (const GroupAction& act : fibers) {
      TwistingFunction t = TwistingFunction::from_values(X, g, {});
      int top = X.max_dim() >= 3 ? 3 : 4;
      HomologyComparison c = compare_homology(t, act, top);
      auto hx = homology_table(simplicial_chains(X, top + 1), top);
      auto hz = homology_table(simplicial_chains(act.space(), top + 1), top);
      o.require(c.equal(), name + ": tensor and cartesian differ");
      o.require(c.tensor == kunneth(hx, hz, top), name + ": differs from the Kunneth formula");
    }
  }
  // m-fold covers of the circle: brute-force complex (e, k) -> (v, k) - (v, k + 1).
  for (int m = 1; m <= 5; ++m) {
    SimplicialSet S = circle();
    FiniteGroup g = FiniteGroup::cyclic(m);
    GroupAction act = GroupAction::regular(g);
    std::map<GenId, GroupElement> edge{{S.generators(1)[0], 1 % m}};
    TwistingFunction t = TwistingFunction::from_values(S, g, edge);
    HomologyComparison c = compare_homology(t, act, 1);
    ChainComplex B;
    B.ranks = {m, m};
    B.boundary = {IntMatrix(0, m), IntMatrix(m, m)};
    for (int k = 0; k < m; ++k) {
      B.boundary[1].at(k, k) += 1;
      B.boundary[1].at((k + 1) % m, k) -= 1;
    }
    auto oracle = homology_table(B, 1);
    std::vector<HomologyGroup> zz{{1, {}}, {1, {}}};
    o.require(c.equal() && c.cartesian == oracle && oracle == zz, "circle cover m = " + std::to_string(m));
  }
  return o;
}

Outcome prism_identities() {
  Outcome o;
  for (int n : {3, 4}) {
    SimplicialSet X = reduced_simplex(n);
    PrismCalculus pc(X);
    long cases = 0;
    for (int d = 1; d <= 4; ++d)
      for (const SimplexRef& x : X.simplices(d))
        for (const IdentityCheck& c : pc.verify_pseudosection(x)) {
          ++cases;
          o.require(c.passed, c.name + ": " + c.detail);
        }
    o.require(cases > 0, "no cases");
    o.require(verify_prisms(X, 4));
  }
  return o;
}

Outcome conventions() {
  Outcome o;
  for (const SimplicialSet& X : {reduced_simplex(3), sphere(2), wedge_of_spheres({2, 3})}) {
    SuiteReport r = verify_conventions(X, 4, 1000, 7);
    o.require(r);
    for (Convention c : kAllConventions) {
      long total = 0;
      for (const CheckResult& k : r.checks)
        if (k.name.rfind(to_string(c), 0) == 0) total = std::max(total, k.cases);
      o.require(total >= 1000, to_string(c) + ": fewer than 1000 cases");
    }
  }
  return o;
}

Outcome homology_cross_check() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto K = oracle::random_known_complex(rng);
    auto H = homology_table(K.complex, K.complex.top());
    o.require(H == K.homology, "complex " + std::to_string(t) + ": SNF differs from the construction");
    for (int p : {2, 3, 5})
      for (int k = 0; k <= K.complex.top(); ++k) {
        int r_out = k >= 1 ? rank_mod_p(K.complex.boundary[k], p) : 0;
        int r_in = k < K.complex.top() ? rank_mod_p(K.complex.boundary[k + 1], p) : 0;
        o.require(K.complex.ranks[k] - r_out - r_in == oracle::uct_mod_p(H, k, p),
                  "complex " + std::to_string(t) + " p = " + std::to_string(p) + " degree " + std::to_string(k));
      }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_s;
  };
  std::vector<Criterion> criteria{
      {1, "loop-space homology of spheres", loop_homology_of_spheres, 30},
      {2, "d^2 = 0 on cobar, tensor and cartesian complexes", boundaries_square_to_zero, 0},
      {3, "Tcx face identities and degeneracy lemma", twisting_cochain_identities, 60},
      {4, "closed formulas for Psi in dimensions 1-3", golden_formulas, 0},
      {5, "Psi is a filtration-preserving chain map", psi_chain_map, 0},
      {6, "tensor and cartesian homology agree", quasi_isomorphisms, 5},
      {7, "pseudosection identities", prism_identities, 0},
      {8, "loop group conventions are simplicial", conventions, 0},
      {9, "Smith normal form agrees with ranks mod p", homology_cross_check, 0},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0) o.require(secs < c.limit_s, "took " + std::to_string(secs) + " s");
    all = all && o.ok;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
