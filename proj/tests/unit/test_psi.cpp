#include <doctest.h>

#include <fstream>
#include <sstream>

#include "looptor/builtins.hpp"
#include "looptor/psi.hpp"
#include "looptor/verify.hpp"

using namespace looptor;

namespace {

std::vector<std::string> golden(int n) {
  std::ifstream in(std::string(LOOPTOR_GOLDEN_DIR) + "/psi_dim" + std::to_string(n) + ".txt");
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) lines.push_back(l);
  return lines;
}

}  // namespace

TEST_CASE("the derivation prepends vertex 0") {
  const UniversalSimplex& u = universal_simplex(2);
  auto w = [&](int dim, std::vector<int> vs) { return u.G.reduce(dim, {Letter{u.delta.simplex(vs), 1}}); };
  PrincipalElement a{u.delta.simplex({0}), w(0, {1, 2})};
  CHECK(derive(u, a) == PrincipalElement{u.delta.simplex({0, 0}), w(1, {0, 1, 2})});
  PrincipalElement b{u.delta.simplex({1}), w(0, {1, 2})};
  CHECK(derive(u, b) == PrincipalElement{u.delta.simplex({0, 1}), w(1, {0, 1, 2})});
}

TEST_CASE("golden formulas in dimensions 1 to 3") {
  for (int n = 1; n <= 3; ++n) {
    const UniversalSimplex& u = universal_simplex(n);
    auto got = format_universal(u, psi_universal(n));
    auto want = golden(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    INFO("n = " << n);
    CHECK(got == want);
  }
}

TEST_CASE("Psi is a chain map on standard simplices") {
  for (int n = 1; n <= 4; ++n) {
    const UniversalSimplex& u = universal_simplex(n);
    CHECK(u.P.diff(psi_universal(n)) == psi_boundary_universal(n));
  }
}

TEST_CASE("psi_unit on a 2-simplex") {
  SimplicialSet X = reduced_simplex(2);
  LoopGroup G(X, Convention::A2B1);
  PrincipalComplex P(G);
  SimplexRef x = X.generator(*X.find("[0,1,2]"));
  PrincipalChain want(PrincipalElement{x, G.identity(2)});
  want.add(PrincipalElement{X.apply_map(x, std::vector<int>{0, 0, 1}),
                            G.reduce(2, {Letter{X.apply_map(x, std::vector<int>{0, 1, 1, 2}), 1}})},
           1);
  CHECK(psi_unit(P, x) == want);
  SimplexRef e = X.generator(*X.find("[0,1]"));
  CHECK(psi_unit(P, e) == PrincipalChain(PrincipalElement{e, G.identity(1)}));
}

TEST_CASE("Psi on vertices is the action") {
  SimplicialSet X = reduced_simplex(2);
  TwistedSetup s = default_setup(X, 3);
  LoopGroup G(X, Convention::A2B1);
  PrincipalComplex P(G);
  InducedMorphism m = InducedMorphism::from_twisting(G, *s.twist);
  TwistedCartesianProduct tcp(*s.twist, *s.action);
  SimplexRef z = s.action->space().generator(2);
  CHECK(psi(P, m, tcp, X.generator(X.basepoint()), z) == PairChain(SimplexPair{X.generator(X.basepoint()), z}));
}

TEST_CASE("Psi suite on small spaces") {
  for (const SimplicialSet& X : {reduced_simplex(3), sphere(2), circle()}) {
    SuiteReport r = verify_psi(X, 4);
    for (const CheckResult& c : r.checks) {
      INFO(c.name << ": " << c.counterexample);
      CHECK(c.passed);
      CHECK(c.cases > 0);
    }
  }
}
