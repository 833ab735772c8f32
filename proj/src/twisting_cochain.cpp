#include "looptor/twisting_cochain.hpp"

#include <algorithm>
#include <numeric>

#include "looptor/error.hpp"

namespace looptor {

int Permutation::sign() const {
  int inv = 0;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a] > values[b]) ++inv;
  return inv % 2;
}

std::vector<Permutation> permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back({v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string ShuffleWord::to_string() const {
  std::string s;
  for (auto it = is_a.rbegin(); it != is_a.rend(); ++it) s += *it ? 'a' : 'b';
  return s;
}

std::vector<int> ShuffleWord::b_degeneracies() const {
  std::vector<int> w;
  for (int k = static_cast<int>(is_a.size()); k >= 1; --k)
    if (!is_a[k - 1]) w.push_back(k - 1);
  return w;
}

std::vector<int> ShuffleWord::a_degeneracies() const {
  std::vector<int> w;
  for (int k = static_cast<int>(is_a.size()); k >= 1; --k)
    if (is_a[k - 1]) w.push_back(k - 1);
  return w;
}

std::vector<ShuffleWord> shuffles(int p, int q) {
  if (p < 0 || q < 0) throw InputError("negative shuffle length");
  std::vector<ShuffleWord> out;
  int len = p + q;
  // Enumerate the positions of the a's as increasing p-subsets of {1..len}.
  std::vector<bool> pick(len, false);
  std::fill(pick.begin(), pick.begin() + q, false);
  std::fill(pick.begin() + q, pick.end(), true);
  do {
    ShuffleWord w{pick, 0};
    int bs_below = 0;
    for (int k = 0; k < len; ++k) {
      if (!pick[k])
        ++bs_below;
      else
        w.sign += bs_below;
    }
    w.sign %= 2;
    out.push_back(std::move(w));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

SimplexRef apply_degeneracies(const SimplicialSet& X, SimplexRef x, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = X.degeneracy(x, *it);
  return x;
}

GroupWord apply_degeneracies(const LoopGroup& G, GroupWord w, const std::vector<int>& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = G.degeneracy(w, *it);
  return w;
}

GroupWord identity_chain_word(int dim) { return {dim, {}}; }

GChain dot(const LoopGroup& G, const GChain& a, const GChain& b) {
  GChain out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      Coefficient c = checked_mul(cu, cv);
      for (const ShuffleWord& w : shuffles(u.dim, v.dim)) {
        GroupWord lhs = apply_degeneracies(G, u, w.b_degeneracies());
        GroupWord rhs = apply_degeneracies(G, v, w.a_degeneracies());
        out.add(G.multiply(lhs, rhs), w.sign ? -c : c);
      }
    }
  }
  return out;
}

std::vector<int> tcx_row(const Permutation& g, int r) {
  int n = static_cast<int>(g.values.size());
  std::vector<int> row{0};
  int best = 0;
  for (int j = 0; j < n; ++j) {
    if (g.values[j] <= r) best = std::max(best, g.values[j]);
    row.push_back(best);
  }
  row.push_back(r + 1);
  return row;
}

GroupWord tcx_perm(const LoopGroup& G, const SimplexRef& x, const Permutation& g) {
  int n = static_cast<int>(g.values.size());
  if (x.dim != n + 1) throw InputError("Tcx(g) needs x of dimension |g| + 1");
  std::vector<Letter> ls;
  for (int r = 0; r <= n; ++r) ls.push_back({G.space().apply_map(x, tcx_row(g, r)), 1});
  return G.reduce(n, std::move(ls));
}

GChain tc(const LoopGroup& G, const SimplexRef& x) {
  if (x.dim < 1) throw InputError("Tcx needs a simplex of positive dimension");
  GChain out;
  for (const Permutation& g : permutations(x.dim - 1)) out.add(tcx_perm(G, x, g), g.sign() ? -1 : 1);
  return out;
}

GChain phi(const LoopGroup& G, const SimplexRef& x) {
  if (x.dim == 0) return {};
  GChain out = tc(G, x);
  if (x.dim == 1) out.add(identity_chain_word(0), -1);
  return out;
}

GroupWord d_n_letterwise(const LoopGroup& G, const SimplexRef& x, const Permutation& g) {
  int n = static_cast<int>(g.values.size());
  if (n < 1) throw InputError("d_n of Tcx(g) needs n >= 1");
  std::vector<Letter> ls;
  for (int r = 0; r <= n; ++r) {
    std::vector<int> row = tcx_row(g, r);
    std::vector<int> left(row.begin(), row.end() - 1);
    std::vector<int> right = row;
    right.erase(right.begin() + n);
    ls.push_back({G.space().apply_map(x, left), -1});
    ls.push_back({G.space().apply_map(x, right), 1});
  }
  return G.reduce(n - 1, std::move(ls));
}

GChain chain_face(const LoopGroup& G, const GChain& c, int i) {
  GChain out;
  for (const auto& [w, k] : c) out.add(G.face(w, i), k);
  return out;
}

GChain chain_boundary(const LoopGroup& G, const GChain& c) {
  GChain out;
  for (const auto& [w, k] : c)
    for (int i = 0; w.dim > 0 && i <= w.dim; ++i) out.add(G.face(w, i), i % 2 ? -k : k);
  return out;
}

GChain normalize(const LoopGroup& G, const GChain& c) {
  return c.filtered([&](const GroupWord& w) { return !G.is_degenerate(w); });
}

}  // namespace looptor
