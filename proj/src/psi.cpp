#include "looptor/psi.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "looptor/error.hpp"

namespace looptor {

PrincipalComplex::PrincipalComplex(const LoopGroup& G) : G_(&G) {
  if (G.convention() != Convention::A2B1) throw InputError("principal complexes use the A2B1 loop group");
}

PrincipalChain PrincipalComplex::d_times(const PrincipalElement& e) const {
  PrincipalChain out;
  int m = e.base.dim;
  const SimplicialSet& X = G_->space();
  for (int i = 0; m > 0 && i <= m; ++i) out.add({X.face(e.base, i), G_->face(e.fiber, i)}, i % 2 ? -1 : 1);
  return out;
}

PrincipalChain PrincipalComplex::d_tau(const PrincipalElement& e) const {
  PrincipalChain out;
  int m = e.base.dim;
  if (m == 0) return out;
  SimplexRef b = G_->space().face(e.base, m);
  GroupWord g = G_->face(e.fiber, m);
  Coefficient s = m % 2 ? -1 : 1;
  out.add({b, G_->multiply(G_->tau(e.base), g)}, s);
  out.add({b, g}, -s);
  return out;
}

PrincipalChain PrincipalComplex::diff(const PrincipalElement& e) const {
  PrincipalChain out = d_times(e);
  out += d_tau(e);
  return normalize(out);
}

PrincipalChain PrincipalComplex::diff(const PrincipalChain& c) const {
  PrincipalChain out;
  for (const auto& [e, k] : c) out.add(diff(e), k);
  return out;
}

bool PrincipalComplex::is_degenerate(const PrincipalElement& e) const {
  for (int i : e.base.degeneracies)
    if (G_->degeneracy(G_->face(e.fiber, i), i) == e.fiber) return true;
  return false;
}

PrincipalChain PrincipalComplex::normalize(const PrincipalChain& c) const {
  return c.filtered([this](const PrincipalElement& e) { return !is_degenerate(e); });
}

PrincipalChain PrincipalComplex::act(const PrincipalChain& c, const GChain& h) const {
  PrincipalChain out;
  const SimplicialSet& X = G_->space();
  for (const auto& [e, k] : c)
    for (const auto& [word, kh] : h) {
      Coefficient coeff = checked_mul(k, kh);
      for (const ShuffleWord& w : shuffles(e.base.dim, word.dim)) {
        auto sb = w.b_degeneracies();
        PrincipalElement r{apply_degeneracies(X, e.base, sb),
                           G_->multiply(apply_degeneracies(*G_, e.fiber, sb),
                                        apply_degeneracies(*G_, word, w.a_degeneracies()))};
        out.add(r, w.sign ? -coeff : coeff);
      }
    }
  return out;
}

std::string PrincipalComplex::to_string(const PrincipalElement& e) const {
  return "(" + G_->space().to_string(e.base) + ", " + G_->to_string(e.fiber) + ")";
}

namespace {

struct Memo {
  std::recursive_mutex mutex;
  std::map<int, std::unique_ptr<UniversalSimplex>> spaces;
  std::map<int, PrincipalChain> psi;
  std::map<int, PrincipalChain> boundary;
};

Memo& memo() {
  static Memo m;
  return m;
}

std::vector<int> prepend_zero(std::vector<int> v) {
  v.insert(v.begin(), 0);
  return v;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& vs) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(f.at(v));
  return out;
}

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

}  // namespace

const UniversalSimplex& universal_simplex(int n) {
  Memo& m = memo();
  std::lock_guard lock(m.mutex);
  auto& slot = m.spaces[n];
  if (!slot) slot = std::make_unique<UniversalSimplex>(n);
  return *slot;
}

PrincipalElement derive(const UniversalSimplex& u, const PrincipalElement& e) {
  PrincipalElement r;
  r.base = u.delta.simplex(prepend_zero(u.delta.vertices(e.base)));
  std::vector<Letter> ls;
  for (const Letter& l : e.fiber.letters) ls.push_back({u.delta.simplex(prepend_zero(u.delta.vertices(l.simplex))), l.exponent});
  r.fiber = u.G.reduce(e.fiber.dim + 1, std::move(ls));
  return r;
}

PrincipalChain derive(const UniversalSimplex& u, const PrincipalChain& c) {
  PrincipalChain out;
  for (const auto& [e, k] : c) out.add(derive(u, e), k);
  return out;
}

PrincipalChain push_universal(const UniversalSimplex& from, const UniversalSimplex& to, const std::vector<int>& f,
                              const PrincipalChain& c) {
  PrincipalChain out;
  for (const auto& [e, k] : c) {
    PrincipalElement r;
    r.base = to.delta.simplex(compose(f, from.delta.vertices(e.base)));
    std::vector<Letter> ls;
    for (const Letter& l : e.fiber.letters) ls.push_back({to.delta.simplex(compose(f, from.delta.vertices(l.simplex))), l.exponent});
    r.fiber = to.G.reduce(e.fiber.dim, std::move(ls));
    out.add(r, k);
  }
  return out;
}

const PrincipalChain& psi_boundary_universal(int n) {
  if (n < 1) throw InputError("the boundary term needs n >= 1");
  Memo& m = memo();
  std::lock_guard lock(m.mutex);
  if (auto it = m.boundary.find(n); it != m.boundary.end()) return it->second;
  const UniversalSimplex& u = universal_simplex(n);
  PrincipalChain inner;
  const UniversalSimplex& lower = universal_simplex(n - 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<int> coface = IncreasingMap::coface(n, i).values;
    inner.add(push_universal(lower, u, coface, psi_universal(n - 1)), i % 2 ? -1 : 1);
  }
  for (int i = 0; i < n; ++i) {
    PrincipalChain head = push_universal(universal_simplex(i), u, range(0, i), psi_universal(i));
    GChain ph = phi(u.G, u.delta.simplex(range(i, n)));
    inner.add(u.P.act(head, ph), n % 2 ? -1 : 1);
  }
  return m.boundary[n] = u.P.normalize(inner);
}

const PrincipalChain& psi_universal(int n) {
  Memo& m = memo();
  std::lock_guard lock(m.mutex);
  if (auto it = m.psi.find(n); it != m.psi.end()) return it->second;
  const UniversalSimplex& u = universal_simplex(n);
  PrincipalChain out;
  if (n == 0)
    out.add({u.delta.simplex({0}), u.G.identity(0)}, 1);
  else
    out = u.P.normalize(derive(u, psi_boundary_universal(n)));
  return m.psi[n] = out;
}

std::vector<std::string> format_universal(const UniversalSimplex& u, const PrincipalChain& c) {
  auto seq = [&](const SimplexRef& s) {
    std::string r = "[";
    for (int v : u.delta.vertices(s)) r += std::to_string(v);
    return r + "]";
  };
  std::vector<std::pair<std::string, Coefficient>> terms;
  for (const auto& [e, k] : c) {
    std::string word;
    if (e.fiber.letters.empty()) word = "1_" + std::to_string(e.fiber.dim);
    for (const Letter& l : e.fiber.letters) {
      if (!word.empty()) word += ' ';
      word += "tau" + seq(l.simplex);
      if (l.exponent < 0) word += "^-1";
    }
    terms.push_back({"(" + seq(e.base) + ", " + word + ")", k});
  }
  std::sort(terms.begin(), terms.end());
  std::vector<std::string> out;
  for (const auto& [t, k] : terms) out.push_back((k > 0 ? "+" : "") + std::to_string(k) + " " + t);
  return out;
}

PrincipalChain psi_unit(const PrincipalComplex& P, const SimplexRef& x) {
  const LoopGroup& G = P.loop_group();
  const UniversalSimplex& u = universal_simplex(x.dim);
  SimplicialMap chi = characteristic_map(u.delta, G.space(), x);
  PrincipalChain out;
  for (const auto& [e, k] : psi_universal(x.dim)) out.add({chi(e.base), push_word(chi, G, e.fiber)}, k);
  return P.normalize(out);
}

PairChain psi(const PrincipalComplex& P, const InducedMorphism& m, const TwistedCartesianProduct& tcp,
              const SimplexRef& x, const SimplexRef& z) {
  PairChain out;
  for (const auto& [e, k] : psi_unit(P, x)) out.add(tcp.act(e.base, m.apply(e.fiber), z), k);
  return out;
}

PairChain psi(const PrincipalComplex& P, const InducedMorphism& m, const TwistedCartesianProduct& tcp,
              const PairChain& c) {
  PairChain out;
  for (const auto& [p, k] : c) out.add(psi(P, m, tcp, p.first, p.second), k);
  return out;
}

}  // namespace looptor
