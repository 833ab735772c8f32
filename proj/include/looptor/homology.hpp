#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "looptor/linear_combination.hpp"
#include "looptor/simplicial.hpp"

namespace looptor {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Coefficient> data;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  Coefficient& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Coefficient at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

struct SmithResult {
  std::vector<mpz_class> factors;  // nonzero invariant factors, each dividing the next
  int rank = 0;
};

SmithResult smith_normal_form(const IntMatrix& m);
int rank_mod_p(const IntMatrix& m, int p);

struct HomologyGroup {
  int betti = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1

  std::string to_string() const;
  bool operator==(const HomologyGroup&) const = default;
};

/// Invariant factors of a direct sum of cyclic groups of the given orders (orders 1 dropped).
std::vector<std::int64_t> canonical_torsion(const std::vector<std::int64_t>& orders);

class BoundaryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chain groups C_0..C_top with boundaries d_k : C_k -> C_{k-1} (rows index C_{k-1}).
struct ChainComplex {
  std::vector<int> ranks;
  std::vector<IntMatrix> boundary;  // boundary[0] unused

  int top() const { return static_cast<int>(ranks.size()) - 1; }
  /// Throws BoundaryError on inconsistent shapes or a nonzero d_{k} d_{k+1}.
  void check() const;
};

/// H_k, taking d_{top+1} = 0.
HomologyGroup homology(const ChainComplex& C, int k);
/// H_0..H_max_k computed in parallel (LOOPTOR_THREADS workers).
std::vector<HomologyGroup> homology_table(const ChainComplex& C, int max_k);

/// Matrix of d from basis `src` to basis `tgt`; throws BoundaryError when d leaves `tgt`.
template <class Key>
IntMatrix boundary_matrix(const std::vector<Key>& src, const std::vector<Key>& tgt,
                          const std::function<LinearCombination<Key>(const Key&)>& d) {
  std::map<Key, int> index;
  for (int r = 0; r < static_cast<int>(tgt.size()); ++r) index.emplace(tgt[r], r);
  IntMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (int c = 0; c < static_cast<int>(src.size()); ++c) {
    for (const auto& [key, coeff] : d(src[c])) {
      auto it = index.find(key);
      if (it == index.end()) throw BoundaryError("boundary term outside the target basis");
      m.at(it->second, c) = coeff;
    }
  }
  return m;
}

/// Assembles a complex from per-degree bases and a differential.
template <class Key>
ChainComplex make_complex(const std::vector<std::vector<Key>>& bases,
                          const std::function<LinearCombination<Key>(const Key&)>& d) {
  ChainComplex C;
  for (const auto& b : bases) C.ranks.push_back(static_cast<int>(b.size()));
  C.boundary.resize(bases.size());
  for (std::size_t k = 1; k < bases.size(); ++k) C.boundary[k] = boundary_matrix(bases[k], bases[k - 1], d);
  if (!bases.empty()) C.boundary[0] = IntMatrix(0, C.ranks[0]);
  return C;
}

/// Normalized chains of X (nondegenerate simplices) up to dimension top.
ChainComplex simplicial_chains(const SimplicialSet& X, int top);

/// Homology of a product from the homology of its factors.
std::vector<HomologyGroup> kunneth(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b,
                                   int max_k);

/// Worker count from LOOPTOR_THREADS (default: hardware concurrency, at least 1).
int worker_count();
/// Runs fn(0..n-1) on worker_count() threads; results are written by index, so order is fixed.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace looptor
