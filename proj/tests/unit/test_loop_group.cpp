#include <doctest.h>

#include <random>

#include "looptor/builtins.hpp"
#include "looptor/loop_group.hpp"

using namespace looptor;

namespace {

SimplexRef gen(const SimplicialSet& X, const char* name) { return X.generator(*X.find(name)); }

GroupWord word(const LoopGroup& G, int dim, std::vector<std::pair<SimplexRef, int>> ls) {
  std::vector<Letter> out;
  for (auto& [s, e] : ls) out.push_back({s, e});
  return G.reduce(dim, out);
}

}  // namespace

TEST_CASE("tau of top degeneracies is the identity under A2") {
  SimplicialSet X = reduced_simplex(2);
  SimplexRef y = gen(X, "[0,1]");
  for (Convention c : {Convention::A2B1, Convention::A2B2}) {
    LoopGroup G(X, c);
    CHECK(G.tau(X.degeneracy(y, 1)).is_identity());
    CHECK(G.tau(X.base_simplex(1)).is_identity());
    CHECK_FALSE(G.tau(X.degeneracy(y, 0)).is_identity());
  }
  LoopGroup A1(X, Convention::A1B1);
  CHECK(A1.tau(X.degeneracy(y, 0)).is_identity());
  CHECK_FALSE(A1.tau(X.degeneracy(y, 1)).is_identity());
  SimplexRef x = gen(X, "[0,1,2]");
  LoopGroup G(X, Convention::A2B1);
  CHECK(G.tau(x) == word(G, 1, {{x, 1}}));
}

TEST_CASE("face rules of the four conventions on a 2-simplex") {
  SimplicialSet X = reduced_simplex(2);
  SimplexRef x = gen(X, "[0,1,2]");
  LoopGroup a2b1(X, Convention::A2B1), a2b2(X, Convention::A2B2), a1b1(X, Convention::A1B1), a1b2(X, Convention::A1B2);
  auto d = [&](int i) { return X.face(x, i); };
  CHECK(a2b1.face(a2b1.tau(x), 0) == a2b1.tau(d(0)));
  CHECK(a2b1.face(a2b1.tau(x), 1) == a2b1.multiply(a2b1.tau_inverse(d(2)), a2b1.tau(d(1))));
  CHECK(a2b2.face(a2b2.tau(x), 1) == a2b2.multiply(a2b2.tau(d(1)), a2b2.tau_inverse(d(2))));
  CHECK(a1b2.face(a1b2.tau(x), 0) == a1b2.multiply(a1b2.tau_inverse(d(0)), a1b2.tau(d(1))));
  CHECK(a1b1.face(a1b1.tau(x), 0) == a1b1.multiply(a1b1.tau(d(1)), a1b1.tau_inverse(d(0))));
  CHECK(a1b1.face(a1b1.tau(x), 1) == a1b1.tau(d(2)));
}

TEST_CASE("degeneracy rules") {
  SimplicialSet X = reduced_simplex(3);
  SimplexRef x = gen(X, "[0,1,2]");
  LoopGroup G(X, Convention::A2B1);
  CHECK(G.degeneracy(G.tau(x), 0) == G.tau(X.degeneracy(x, 0)));
  SimplexRef y = gen(X, "[0,1]");
  CHECK(G.degeneracy(G.tau(X.degeneracy(y, 1)), 1).is_identity());
  LoopGroup A1(X, Convention::A1B1);
  CHECK(A1.degeneracy(A1.tau(x), 0) == A1.tau(X.degeneracy(x, 1)));
}

TEST_CASE("free reduction") {
  SimplicialSet X = reduced_simplex(2);
  LoopGroup G(X, Convention::A2B1);
  SimplexRef x = gen(X, "[0,1,2]");
  SimplexRef y = X.degeneracy(gen(X, "[0,1]"), 0);
  GroupWord w = word(G, 1, {{x, 1}, {y, 1}, {y, -1}, {x, -1}});
  CHECK(w.is_identity());
  GroupWord u = word(G, 1, {{x, 1}, {y, -1}});
  CHECK(G.multiply(u, G.inverse(u)).is_identity());
  CHECK(G.to_string(u) == "tau([0,1,2]) tau(s0 [0,1])^-1");
  CHECK_THROWS(word(G, 0, {{x, 1}}));
}

TEST_CASE("degenerate words") {
  SimplicialSet X = reduced_simplex(3);
  LoopGroup G(X, Convention::A2B1);
  CHECK(G.degenerate_index(G.identity(1)) == 0);
  CHECK_FALSE(G.is_degenerate(G.tau(gen(X, "[0,1,2]"))));
  // tau(s_0 x) tau(s_0 x') with x, x' 2-simplices: the word is s_0 of tau(x) tau(x').
  SimplexRef a = gen(X, "[0,1,2]"), b = gen(X, "[0,1,3]");
  GroupWord w = G.multiply(G.tau(X.degeneracy(a, 0)), G.tau(X.degeneracy(b, 0)));
  CHECK(G.degenerate_index(w) == 0);
  CHECK(G.degeneracy(G.face(w, 0), 0) == w);
}

TEST_CASE("push_word along a characteristic map") {
  StandardSimplex D(2);
  SimplicialSet X = reduced_simplex(2);
  SimplicialMap f = characteristic_map(D, X, gen(X, "[0,1,2]"));
  LoopGroup GD(D.space(), Convention::A2B1), GX(X, Convention::A2B1);
  GroupWord w = GD.tau(D.simplex({0, 1, 2}));
  CHECK(push_word(f, GX, w) == GX.tau(gen(X, "[0,1,2]")));
  for (int i = 0; i <= 1; ++i) CHECK(push_word(f, GX, GD.face(w, i)) == GX.face(push_word(f, GX, w), i));
}
