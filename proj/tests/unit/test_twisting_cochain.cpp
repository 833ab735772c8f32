#include <doctest.h>

#include "looptor/builtins.hpp"
#include "looptor/twisting_cochain.hpp"

using namespace looptor;

namespace {

SimplexRef gen(const SimplicialSet& X, const char* name) { return X.generator(*X.find(name)); }

GroupWord letters(const LoopGroup& G, const SimplexRef& x, int dim, const std::vector<std::vector<int>>& maps) {
  std::vector<Letter> ls;
  for (const auto& m : maps) ls.push_back({G.space().apply_map(x, m), 1});
  return G.reduce(dim, ls);
}

}  // namespace

TEST_CASE("shuffles of a^2 and b") {
  auto ws = shuffles(2, 1);
  REQUIRE(ws.size() == 3);
  std::vector<std::string> names;
  for (const auto& w : ws) names.push_back(w.to_string());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"aab", "aba", "baa"});
  for (const auto& w : ws)
    if (w.to_string() == "aba") CHECK(w.sign == 1);
  auto empty = shuffles(0, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].sign == 0);
  CHECK(empty[0].is_a.empty());
}

TEST_CASE("shuffle product of two one-letter chains") {
  SimplicialSet X = reduced_simplex(3);
  LoopGroup G(X, Convention::A2B1);
  GroupWord s = G.tau(gen(X, "[0,1,2]")), t = G.tau(gen(X, "[0,1,3]"));
  GChain got = dot(G, GChain(s), GChain(t));
  // Brute force over the two shuffles ab and ba.
  GChain want;
  want.add(G.multiply(G.degeneracy(s, 1), G.degeneracy(t, 0)), 1);
  want.add(G.multiply(G.degeneracy(s, 0), G.degeneracy(t, 1)), -1);
  CHECK(got == want);
  CHECK(dot(G, GChain(s), GChain(G.identity(0))) == GChain(s));
}

TEST_CASE("shuffle product is associative") {
  SimplicialSet X = reduced_simplex(3);
  LoopGroup G(X, Convention::A2B1);
  GChain a(G.tau(gen(X, "[0,1]"))), b(G.tau(gen(X, "[0,1,2]"))), c(G.tau(gen(X, "[1,2]")));
  CHECK(dot(G, dot(G, a, b), c) == dot(G, a, dot(G, b, c)));
  CHECK(dot(G, dot(G, b, b), a) == dot(G, b, dot(G, b, a)));
}

TEST_CASE("rows of Tcx") {
  Permutation g{{2, 3, 1}};
  CHECK(tcx_row(g, 0) == std::vector<int>{0, 0, 0, 0, 1});
  CHECK(tcx_row(g, 1) == std::vector<int>{0, 0, 0, 1, 2});
  CHECK(tcx_row(g, 2) == std::vector<int>{0, 2, 2, 2, 3});
  CHECK(tcx_row(g, 3) == std::vector<int>{0, 2, 3, 3, 4});
  CHECK(permutations(3).size() == 6);
  CHECK(Permutation{{2, 3, 1}}.sign() == 0);
  CHECK(Permutation{{2, 1, 3}}.sign() == 1);
}

TEST_CASE("Tcx examples") {
  SimplicialSet X = reduced_simplex(4);
  LoopGroup G(X, Convention::A2B1);
  SimplexRef e = gen(X, "[0,1]");
  CHECK(tc(G, e) == GChain(G.tau(e)));
  SimplexRef x2 = gen(X, "[0,1,2]");
  CHECK(tcx_perm(G, x2, {{1}}) == letters(G, x2, 1, {{0, 0, 1}, {0, 1, 2}}));
  CHECK(tc(G, x2) == GChain(letters(G, x2, 1, {{0, 0, 1}, {0, 1, 2}})));
  SimplexRef x4 = gen(X, "[0,1,2,3,4]");
  Permutation g{{2, 3, 1}};
  GroupWord w = tcx_perm(G, x4, g);
  CHECK(w == letters(G, x4, 3, {{0, 0, 0, 0, 1}, {0, 0, 0, 1, 2}, {0, 2, 2, 2, 3}, {0, 2, 3, 3, 4}}));
  GroupWord d3 = letters(G, x4, 2, {{0, 0, 0, 2}, {0, 2, 2, 3}, {0, 2, 3, 4}});
  CHECK(G.face(w, 3) == d3);
  CHECK(d_n_letterwise(G, x4, g) == d3);
}

TEST_CASE("phi on low simplices") {
  SimplicialSet X = reduced_simplex(2);
  LoopGroup G(X, Convention::A2B1);
  CHECK(phi(G, X.generator(X.basepoint())).empty());
  SimplexRef e = gen(X, "[0,1]");
  GChain want(G.tau(e));
  want.add(G.identity(0), -1);
  CHECK(phi(G, e) == want);
  CHECK(phi(G, X.base_simplex(1)).empty());
}

TEST_CASE("Tcx of degenerate simplices is degenerate") {
  SimplicialSet X = reduced_simplex(3);
  LoopGroup G(X, Convention::A2B1);
  for (int d = 2; d <= 4; ++d)
    for (const SimplexRef& x : X.simplices(d))
      if (x.is_degenerate())
        for (const Permutation& g : permutations(d - 1)) CHECK(G.is_degenerate(tcx_perm(G, x, g)));
}

TEST_CASE("top face from matrix rows agrees with the group face") {
  SimplicialSet X = reduced_simplex(5);
  LoopGroup G(X, Convention::A2B1);
  for (int d = 2; d <= 5; ++d)
    for (const SimplexRef& x : X.nondegenerate(d))
      for (const Permutation& g : permutations(d - 1))
        CHECK(d_n_letterwise(G, x, g) == G.face(tcx_perm(G, x, g), d - 1));
}

TEST_CASE("interior faces of Tcx vanish and the d_0 formula holds") {
  SimplicialSet X = reduced_simplex(4);
  LoopGroup G(X, Convention::A2B1);
  SimplexRef x = gen(X, "[0,1,2,3,4]");
  GChain t = tc(G, x);
  for (int i = 1; i < 3; ++i) CHECK(chain_face(G, t, i).empty());
  GChain prod;
  auto span = [](int a, int b) {
    std::vector<int> v;
    for (int k = a; k <= b; ++k) v.push_back(k);
    return v;
  };
  for (int k = 1; k <= 3; ++k)
    prod.add(dot(G, tc(G, X.apply_map(x, span(0, k))), tc(G, X.apply_map(x, span(k, 4)))), (k - 1) % 2 ? -1 : 1);
  CHECK(chain_face(G, t, 0) == prod);
}
