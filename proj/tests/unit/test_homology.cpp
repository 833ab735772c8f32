#include <doctest.h>

#include <random>

#include "looptor/builtins.hpp"
#include "looptor/homology.hpp"
#include "../support/oracles.hpp"

using namespace looptor;

namespace {

IntMatrix mat(int r, int c, std::vector<Coefficient> v) {
  IntMatrix m(r, c);
  m.data = std::move(v);
  return m;
}

std::vector<long> factors(const SmithResult& s) {
  std::vector<long> out;
  for (const auto& f : s.factors) out.push_back(f.get_si());
  return out;
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  CHECK(factors(smith_normal_form(mat(1, 1, {2}))) == std::vector<long>{2});
  CHECK(factors(smith_normal_form(mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}))) == std::vector<long>{1, 1, 1});
  SmithResult s = smith_normal_form(mat(2, 2, {2, 4, 6, 8}));
  CHECK(factors(s) == std::vector<long>{2, 4});
  CHECK(s.rank == 2);
  CHECK(smith_normal_form(IntMatrix(0, 3)).rank == 0);
}

TEST_CASE("homology of small complexes") {
  auto H = homology_table(simplicial_chains(circle(), 2), 1);
  CHECK(H[0] == HomologyGroup{1, {}});
  CHECK(H[1] == HomologyGroup{1, {}});
  ChainComplex C;
  C.ranks = {1, 1};
  C.boundary = {IntMatrix(0, 1), mat(1, 1, {2})};
  CHECK(homology(C, 0) == HomologyGroup{0, {2}});
  CHECK(homology(C, 1) == HomologyGroup{0, {}});
  CHECK(HomologyGroup{2, {2, 6}}.to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(canonical_torsion({2, 3}) == std::vector<std::int64_t>{6});
  CHECK(canonical_torsion({2, 4, 1}) == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("non-complexes are rejected") {
  ChainComplex C;
  C.ranks = {1, 1, 1};
  C.boundary = {IntMatrix(0, 1), mat(1, 1, {1}), mat(1, 1, {1})};
  CHECK_THROWS_AS(C.check(), BoundaryError);
}

TEST_CASE("random complexes with known homology") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    auto K = oracle::random_known_complex(rng);
    K.complex.check();
    auto H = homology_table(K.complex, K.complex.top());
    for (int k = 0; k <= K.complex.top(); ++k) {
      INFO("trial " << t << " degree " << k);
      CHECK(H[k] == K.homology[k]);
      for (int p : {2, 3, 5}) {
        CHECK(rank_mod_p(K.complex.boundary[std::max(k, 1)], p) == oracle::rank_mod(K.complex.boundary[std::max(k, 1)], p));
        CHECK(oracle::mod_p_betti(K.complex, k, p) == oracle::uct_mod_p(H, k, p));
      }
    }
  }
}

TEST_CASE("Kunneth formula") {
  std::vector<HomologyGroup> a{{1, {}}, {0, {2}}}, b{{1, {}}, {0, {2}}};
  auto k = kunneth(a, b, 3);
  CHECK(k[0] == HomologyGroup{1, {}});
  CHECK(k[1] == HomologyGroup{0, {2, 2}});
  CHECK(k[2] == HomologyGroup{0, {2}});
  CHECK(k[3] == HomologyGroup{0, {2}});  // Tor(Z/2, Z/2) shifted up by one
}

TEST_CASE("homology of spaces") {
  auto H = homology_table(simplicial_chains(reduced_simplex(3), 4), 3);
  // Reduced 3-simplex: a wedge of three circles, then contractible cells fill in.
  CHECK(H[0] == HomologyGroup{1, {}});
  CHECK(H[1] == HomologyGroup{3, {}});
  CHECK(H[2] == HomologyGroup{0, {}});
  CHECK(H[3] == HomologyGroup{0, {}});
  auto S = homology_table(simplicial_chains(sphere(3), 4), 3);
  CHECK(S[3] == HomologyGroup{1, {}});
  CHECK(S[2] == HomologyGroup{0, {}});
}

TEST_CASE("parallel_for visits every index") {
  std::vector<int> seen(100, 0);
  parallel_for(100, [&](int i) { seen[i] += 1; });
  for (int v : seen) CHECK(v == 1);
  CHECK_THROWS(parallel_for(10, [](int i) {
    if (i == 3) throw std::runtime_error("x");
  }));
}
