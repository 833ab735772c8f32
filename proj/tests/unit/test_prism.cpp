#include <doctest.h>

#include "looptor/builtins.hpp"
#include "looptor/prism.hpp"

using namespace looptor;

namespace {

SimplexRef gen(const SimplicialSet& X, const char* name) { return X.generator(*X.find(name)); }

PrismWord letter(const PrismCalculus& pc, const SimplexRef& x, int i, int e = 1) {
  Prism p{x, i, e};
  return pc.make(e > 0 ? pc.source_of(p) : pc.target_of({x, i, 1}), {p});
}

}  // namespace

TEST_CASE("source and target of an elementary prism") {
  SimplicialSet X = reduced_simplex(3);
  PrismCalculus pc(X);
  SimplexRef x = gen(X, "[0,1,2,3]");
  for (int i = 0; i <= 2; ++i) {
    CHECK(pc.source_of({x, i, 1}) == X.face(x, i + 1));
    CHECK(pc.target_of({x, i, 1}) == X.face(x, i));
  }
}

TEST_CASE("faces of (x, n-1)") {
  SimplicialSet X = reduced_simplex(3);
  PrismCalculus pc(X);
  SimplexRef x = gen(X, "[0,1,2,3]");  // x in X_3, prisms in dimension 2, n - 1 = 1
  PrismWord w = letter(pc, x, 1);
  PrismWord top = pc.face(w, 1);
  CHECK(top.letters.empty());
  CHECK(top.source == X.face(X.face(x, 2), 1));
  CHECK(pc.face(w, 0) == letter(pc, X.face(x, 0), 0));
  CHECK(pc.face(w, 2) == letter(pc, X.face(x, 3), 1));
}

TEST_CASE("degeneracies of elementary prisms") {
  SimplicialSet X = reduced_simplex(3);
  PrismCalculus pc(X);
  SimplexRef x = gen(X, "[0,1,2]");  // prisms in dimension 1
  CHECK(pc.degeneracy(letter(pc, x, 1), 0) == letter(pc, X.degeneracy(x, 0), 2));
  CHECK(pc.degeneracy(letter(pc, x, 0), 1) == letter(pc, X.degeneracy(x, 2), 0));
  PrismWord split = pc.degeneracy(letter(pc, x, 0), 0);
  PrismWord expect = pc.multiply(letter(pc, X.degeneracy(x, 0), 1), letter(pc, X.degeneracy(x, 1), 0));
  CHECK(split == expect);
  CHECK(pc.degeneracy(letter(pc, x, 0, -1), 0) == pc.inverse(expect));
}

TEST_CASE("iota in low dimensions") {
  SimplicialSet X = reduced_simplex(2);
  PrismCalculus pc(X);
  SimplexRef e = gen(X, "[0,1]");
  CHECK(pc.iota(e) == letter(pc, X.degeneracy(e, 1), 0));
  SimplexRef x = gen(X, "[0,1,2]");
  PrismWord expect = pc.multiply(letter(pc, X.degeneracy(x, 2), 1),
                                 letter(pc, X.degeneracy(X.degeneracy(X.face(x, 1), 1), 2), 0));
  CHECK(pc.iota(x) == expect);
  CHECK(pc.iota(x).target == X.base_simplex(2));
}

TEST_CASE("tau is a loop and vanishes on top degeneracies") {
  SimplicialSet X = reduced_simplex(3);
  PrismCalculus pc(X);
  SimplexRef e = gen(X, "[0,1]");
  PrismWord t = pc.tau(e);
  CHECK(t.source == X.base_simplex(0));
  CHECK(t.target == X.base_simplex(0));
  CHECK(t == pc.multiply(pc.inverse(pc.iota(X.face(e, 1))), pc.multiply(letter(pc, e, 0), pc.iota(X.face(e, 0)))));
  SimplexRef y = gen(X, "[0,1,2]");
  CHECK(pc.tau(X.degeneracy(y, 2)).letters.empty());
  CHECK(pc.tau(X.degeneracy(y, 2)).source == X.base_simplex(2));
}

TEST_CASE("pseudosection identities on reduced simplices") {
  for (int n : {3, 4}) {
    SimplicialSet X = reduced_simplex(n);
    PrismCalculus pc(X);
    for (int d = 1; d <= 4; ++d)
      for (const SimplexRef& x : X.simplices(d))
        for (const IdentityCheck& c : pc.verify_pseudosection(x)) {
          INFO(c.name << " " << c.detail);
          CHECK(c.passed);
        }
  }
}
