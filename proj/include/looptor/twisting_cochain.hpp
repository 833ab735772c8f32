#pragma once

#include <string>
#include <vector>

#include "looptor/linear_combination.hpp"
#include "looptor/loop_group.hpp"

namespace looptor {

/// Integer combination of words of G_n X (all reduced words, degenerate ones included).
using GChain = LinearCombination<GroupWord>;

struct Permutation {
  std::vector<int> values;  // g_1..g_n, a bijection of {1..n}
  int sign() const;         // parity of inversions
};

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> permutations(int n);

/// w = x_{p+q} ... x_1 over {a, b}; is_a[k-1] tells whether x_k = a.
struct ShuffleWord {
  std::vector<bool> is_a;
  int sign = 0;  // parity of the swaps moving w to b^q a^p

  std::string to_string() const;  // written x_{p+q} first
  /// Degeneracy word s_{b_q - 1} ... s_{b_1 - 1} (decreasing).
  std::vector<int> b_degeneracies() const;
  std::vector<int> a_degeneracies() const;
};

std::vector<ShuffleWord> shuffles(int p, int q);

/// s_{j_1} ... s_{j_k} applied to x (rightmost first).
SimplexRef apply_degeneracies(const SimplicialSet& X, SimplexRef x, const std::vector<int>& word);
GroupWord apply_degeneracies(const LoopGroup& G, GroupWord w, const std::vector<int>& word);

/// The shuffle product on the group ring: sum over Shuf(a^p, b^q) of (s_b sigma)(s_a sigma').
GChain dot(const LoopGroup& G, const GChain& a, const GChain& b);
GroupWord identity_chain_word(int dim);

/// Row r of the matrix of Tcx(g): [0, alpha_{r1}, ..., alpha_{rn}, r + 1].
std::vector<int> tcx_row(const Permutation& g, int r);
/// Tcx(g) for x in X_{n+1} and g in S_n.
GroupWord tcx_perm(const LoopGroup& G, const SimplexRef& x, const Permutation& g);
GChain tc(const LoopGroup& G, const SimplexRef& x);
/// 0 on vertices, tc(x) - 1 on edges, tc(x) above.
GChain phi(const LoopGroup& G, const SimplexRef& x);
/// The top face of Tcx(g) read off the matrix rows (A2B1 form).
GroupWord d_n_letterwise(const LoopGroup& G, const SimplexRef& x, const Permutation& g);

GChain chain_face(const LoopGroup& G, const GChain& c, int i);
/// Alternating face sum on the group ring.
GChain chain_boundary(const LoopGroup& G, const GChain& c);
/// Drops degenerate words.
GChain normalize(const LoopGroup& G, const GChain& c);

}  // namespace looptor
