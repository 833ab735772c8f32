#include "looptor/verify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <regex>

#include "looptor/cobar.hpp"
#include "looptor/error.hpp"
#include "looptor/homology.hpp"
#include "looptor/prism.hpp"
#include "looptor/psi.hpp"
#include "looptor/twisting_cochain.hpp"

namespace looptor {

void CheckResult::expect(bool ok, const std::function<std::string()>& detail) {
  ++cases;
  if (!ok && passed) {
    passed = false;
    counterexample = detail();
  }
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<CheckResult> run_checks(const std::vector<std::function<std::vector<CheckResult>()>>& tasks) {
  std::vector<std::vector<CheckResult>> parts(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), [&](int i) { parts[i] = tasks[i](); });
  std::vector<CheckResult> merged;
  std::map<std::string, std::size_t> index;
  for (const auto& part : parts)
    for (const CheckResult& c : part) {
      auto [it, fresh] = index.emplace(c.name, merged.size());
      if (fresh) {
        merged.push_back(c);
        continue;
      }
      CheckResult& m = merged[it->second];
      m.cases += c.cases;
      if (!c.passed && m.passed) {
        m.passed = false;
        m.counterexample = c.counterexample;
      }
    }
  return merged;
}

namespace {

using Task = std::function<std::vector<CheckResult>()>;

// Named families accumulated by one task.
class Families {
 public:
  CheckResult& operator[](const std::string& name) {
    auto [it, fresh] = index_.emplace(name, checks_.size());
    if (fresh) checks_.push_back({name, true, 0, {}});
    return checks_[it->second];
  }
  std::vector<CheckResult> take() { return {checks_.begin(), checks_.end()}; }

 private:
  std::deque<CheckResult> checks_;
  std::map<std::string, std::size_t> index_;
};

std::vector<int> range(int a, int b) {
  std::vector<int> out;
  for (int k = a; k <= b; ++k) out.push_back(k);
  return out;
}

std::string chain_string(const LoopGroup& G, const GChain& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [w, k] : c) s += (s.empty() ? "" : " ") + std::string(k > 0 ? "+" : "") + std::to_string(k) + "*" + G.to_string(w);
  return s;
}

template <class Key, class Fmt>
std::string lc_string(const LinearCombination<Key>& c, Fmt fmt) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [key, k] : c) s += (s.empty() ? "" : " ") + std::string(k > 0 ? "+" : "") + std::to_string(k) + "*" + fmt(key);
  return s;
}

GroupWord random_word(std::mt19937_64& rng, const LoopGroup& G, const std::vector<SimplexRef>& pool, int dim,
                      int max_len) {
  std::vector<Letter> ls;
  if (!pool.empty()) {
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k)
      ls.push_back({pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)],
                    std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
  }
  return G.reduce(dim, std::move(ls));
}

std::vector<CheckResult> convention_cases(const SimplicialSet& X, Convention conv, int max_dim, int cases,
                                          std::uint64_t seed) {
  LoopGroup G(X, conv);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<SimplexRef>> pools(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n)
    for (const SimplexRef& y : X.simplices(n + 1))
      if (!G.excluded(y)) pools[n].push_back(y);
  Families f;
  std::string tag = to_string(conv) + ": ";
  auto& dd = f[tag + "d_i d_j = d_{j-1} d_i"];
  auto& ds = f[tag + "d_i s_j rules"];
  auto& ss = f[tag + "s_i s_j = s_{j+1} s_i"];
  auto& dh = f[tag + "faces are homomorphisms"];
  auto& sh = f[tag + "degeneracies are homomorphisms"];
  for (int c = 0; c < cases; ++c) {
    int n = std::uniform_int_distribution<int>(0, max_dim)(rng);
    GroupWord w = random_word(rng, G, pools[n], n, 4);
    GroupWord v = random_word(rng, G, pools[n], n, 3);
    auto show = [&](const std::string& what) { return what + " on " + G.to_string(w); };
    for (int j = 1; n >= 2 && j <= n; ++j)
      for (int i = 0; i < j; ++i)
        dd.expect(G.face(G.face(w, j), i) == G.face(G.face(w, i), j - 1),
                  [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
    for (int j = 0; j <= n; ++j) {
      GroupWord sw = G.degeneracy(w, j);
      for (int i = 0; i <= n + 1; ++i) {
        GroupWord expect;
        if (i == j || i == j + 1)
          expect = w;
        else if (n == 0)
          continue;
        else if (i < j)
          expect = G.degeneracy(G.face(w, i), j - 1);
        else
          expect = G.degeneracy(G.face(w, i - 1), j);
        ds.expect(G.face(sw, i) == expect, [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
      }
      for (int i = 0; i <= j; ++i)
        ss.expect(G.degeneracy(G.degeneracy(w, j), i) == G.degeneracy(G.degeneracy(w, i), j + 1),
                  [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
      sh.expect(G.degeneracy(G.multiply(w, v), j) == G.multiply(G.degeneracy(w, j), G.degeneracy(v, j)),
                [&] { return show("j=" + std::to_string(j)); });
    }
    for (int i = 0; n >= 1 && i <= n; ++i)
      dh.expect(G.face(G.multiply(w, v), i) == G.multiply(G.face(w, i), G.face(v, i)),
                [&] { return show("i=" + std::to_string(i)); });
  }
  return f.take();
}

}  // namespace

SuiteReport verify_conventions(const SimplicialSet& X, int max_dim, int cases, std::uint64_t seed) {
  std::vector<Task> tasks;
  for (Convention c : kAllConventions)
    tasks.push_back([&X, c, max_dim, cases, seed] { return convention_cases(X, c, max_dim, cases, seed + static_cast<int>(c)); });
  return {"conventions", run_checks(tasks)};
}

SuiteReport verify_prisms(const SimplicialSet& X, int max_dim, std::uint64_t seed) {
  if (!X.is_reduced()) throw InputError("the prism suite needs a reduced simplicial set");
  std::vector<Task> tasks;
  for (int n = 1; n <= max_dim; ++n)
    for (const SimplexRef& x : X.simplices(n))
      tasks.push_back([&X, x] {
        PrismCalculus pc(X);
        Families f;
        for (const IdentityCheck& c : pc.verify_pseudosection(x)) {
          std::string family = c.name.substr(0, c.name.find(" at "));
          family = std::regex_replace(family, std::regex(R"(_\d+)"), "_i");
          f[family].expect(c.passed, [&] { return c.name + ": " + c.detail; });
        }
        return f.take();
      });

  // Random prism words: simplicial identities and compatibility of source and target.
  for (int n = 0; n < max_dim; ++n)
    tasks.push_back([&X, n, seed] {
      PrismCalculus pc(X);
      std::mt19937_64 rng(seed + n);
      std::map<SimplexRef, std::vector<Prism>> out_of;
      for (const SimplexRef& xi : X.simplices(n + 1))
        for (int i = 0; i <= n; ++i)
          for (int e : {1, -1}) {
            Prism p{xi, i, e};
            if (!pc.is_identity_letter(p)) out_of[pc.source_of(p)].push_back(p);
          }
      std::vector<SimplexRef> starts = X.simplices(n);
      Families f;
      auto& dd = f["prism words: d_i d_j = d_{j-1} d_i"];
      auto& ds = f["prism words: d_i s_j rules"];
      auto& ss = f["prism words: s_i s_j = s_{j+1} s_i"];
      auto& st = f["prism words: source and target commute with faces and degeneracies"];
      auto& ins = f["prism words: insert-then-cancel returns the word"];
      for (int c = 0; c < 200; ++c) {
        SimplexRef at = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
        std::vector<Prism> ls;
        int len = std::uniform_int_distribution<int>(0, 4)(rng);
        SimplexRef cur = at;
        for (int k = 0; k < len; ++k) {
          auto it = out_of.find(cur);
          if (it == out_of.end()) break;
          const Prism& p = it->second[std::uniform_int_distribution<std::size_t>(0, it->second.size() - 1)(rng)];
          ls.push_back(p);
          cur = pc.target_of(p);
        }
        PrismWord w = pc.make(at, ls);
        auto show = [&](const std::string& s) { return s + " on " + pc.to_string(w); };
        for (int j = 1; n >= 2 && j <= n; ++j)
          for (int i = 0; i < j; ++i)
            dd.expect(pc.face(pc.face(w, j), i) == pc.face(pc.face(w, i), j - 1),
                      [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
        for (int j = 0; j <= n; ++j) {
          PrismWord sw = pc.degeneracy(w, j);
          st.expect(sw.target == X.degeneracy(w.target, j), [&] { return show("s_" + std::to_string(j)); });
          for (int i = 0; i <= n + 1; ++i) {
            PrismWord expect;
            if (i == j || i == j + 1)
              expect = w;
            else if (n == 0)
              continue;
            else if (i < j)
              expect = pc.degeneracy(pc.face(w, i), j - 1);
            else
              expect = pc.degeneracy(pc.face(w, i - 1), j);
            ds.expect(pc.face(sw, i) == expect, [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
          }
          for (int i = 0; i <= j; ++i)
            ss.expect(pc.degeneracy(pc.degeneracy(w, j), i) == pc.degeneracy(pc.degeneracy(w, i), j + 1),
                      [&] { return show("i=" + std::to_string(i) + " j=" + std::to_string(j)); });
        }
        for (int j = 0; n >= 1 && j <= n; ++j)
          st.expect(pc.face(w, j).target == X.face(w.target, j), [&] { return show("d_" + std::to_string(j)); });
        // Insert p p^{-1} at a random cut.
        if (!w.letters.empty()) {
          std::size_t cut = std::uniform_int_distribution<std::size_t>(0, w.letters.size())(rng);
          SimplexRef mid = cut == 0 ? w.source : pc.target_of(w.letters[cut - 1]);
          auto it = out_of.find(mid);
          if (it != out_of.end()) {
            Prism p = it->second.front();
            std::vector<Prism> longer(w.letters.begin(), w.letters.begin() + cut);
            longer.push_back(p);
            longer.push_back({p.simplex, p.position, -p.exponent});
            longer.insert(longer.end(), w.letters.begin() + cut, w.letters.end());
            ins.expect(pc.make(w.source, longer) == w, [&] { return show("insert"); });
          }
        }
      }
      return f.take();
    });

  // The embedding of the loop group into prism loops.
  for (int n = 0; n < max_dim; ++n)
    tasks.push_back([&X, n, seed] {
      PrismCalculus pc(X);
      LoopGroup G(X, Convention::A2B1);
      std::mt19937_64 rng(seed * 31 + n);
      std::vector<SimplexRef> pool;
      for (const SimplexRef& y : X.simplices(n + 1))
        if (!G.excluded(y)) pool.push_back(y);
      Families f;
      auto& fc = f["embedding commutes with faces"];
      auto& dc = f["embedding commutes with degeneracies"];
      auto& inj = f["embedding keeps the generator letters"];
      auto& tau = f["tau as a prism is the image of the generator"];
      for (const SimplexRef& y : pool)
        tau.expect(pc.embed(G.tau(y)) == pc.tau(y), [&] { return X.to_string(y); });
      for (int c = 0; c < 200; ++c) {
        GroupWord w = random_word(rng, G, pool, n, 4);
        PrismWord e = pc.embed(w);
        auto show = [&](const std::string& s) { return s + " on " + G.to_string(w); };
        for (int i = 0; n >= 1 && i <= n; ++i)
          fc.expect(pc.embed(G.face(w, i)) == pc.face(e, i), [&] { return show("d_" + std::to_string(i)); });
        for (int i = 0; i <= n; ++i)
          dc.expect(pc.embed(G.degeneracy(w, i)) == pc.degeneracy(e, i), [&] { return show("s_" + std::to_string(i)); });
        std::vector<Letter> key;
        for (const Prism& p : e.letters)
          if (p.position == n) key.push_back({p.simplex, p.exponent});
        inj.expect(key == w.letters, [&] { return show("recover"); });
      }
      return f.take();
    });
  return {"prisms", run_checks(tasks)};
}

SuiteReport verify_twisting(const SimplicialSet& X, int max_dim) {
  std::vector<Task> tasks;
  for (int dim = 1; dim <= std::min(max_dim, X.max_dim()); ++dim)
    for (const SimplexRef& x : X.nondegenerate(dim))
      tasks.push_back([&X, x] {
        LoopGroup G(X, Convention::A2B1);
        Families f;
        int n = x.dim - 1;
        GChain t = tc(G, x);
        std::string at = X.to_string(x);
        for (int i = 1; i < n; ++i)
          f["interior faces of Tcx vanish"].expect(chain_face(G, t, i).empty(), [&] {
            return "d_" + std::to_string(i) + " at " + at + ": " + chain_string(G, chain_face(G, t, i));
          });
        if (n >= 1) {
          GChain d0 = chain_face(G, t, 0), dn = chain_face(G, t, n);
          GChain prod;
          for (int k = 1; k <= n; ++k)
            prod.add(dot(G, tc(G, X.apply_map(x, range(0, k))), tc(G, X.apply_map(x, range(k, n + 1)))),
                     (k - 1) % 2 ? -1 : 1);
          f["d_0 Tcx is the product formula"].expect(d0 == prod, [&] {
            return at + ": " + chain_string(G, d0) + " vs " + chain_string(G, prod);
          });
          GChain faces;
          for (int k = 1; k <= n; ++k) faces.add(tc(G, X.face(x, k)), k % 2 ? -1 : 1);
          GChain lhs = (n % 2 ? -1 : 1) * dn;
          f["d_n Tcx is the face formula"].expect(lhs == faces, [&] {
            return at + ": " + chain_string(G, lhs) + " vs " + chain_string(G, faces);
          });
          GChain ends = d0;
          ends.add(dn, n % 2 ? -1 : 1);
          f["dTcx = d_0 Tcx + (-1)^n d_n Tcx"].expect(chain_boundary(G, t) == ends, [&] { return at; });
          for (const Permutation& g : permutations(n))
            f["top face of Tcx(g) from the matrix rows"].expect(
                d_n_letterwise(G, x, g) == G.face(tcx_perm(G, x, g), n), [&] { return at; });
          Permutation id{range(1, n)};
          f["Tcx(identity) is nondegenerate"].expect(!G.is_degenerate(tcx_perm(G, x, id)), [&] { return at; });
        }
        // d phi x = phi dx - sum (-1)^i phi[0..i] . phi[i..N], in the normalized quotient.
        int N = x.dim;
        GChain lhs = normalize(G, chain_boundary(G, phi(G, x)));
        GChain rhs;
        for (int i = 0; i <= N; ++i) rhs.add(phi(G, X.face(x, i)), i % 2 ? -1 : 1);
        for (int i = 0; i <= N; ++i)
          rhs.add(dot(G, phi(G, X.apply_map(x, range(0, i))), phi(G, X.apply_map(x, range(i, N)))), i % 2 ? 1 : -1);
        rhs = normalize(G, rhs);
        f["twisting cochain identity"].expect(lhs == rhs, [&] {
          return at + ": " + chain_string(G, lhs) + " vs " + chain_string(G, rhs);
        });
        return f.take();
      });
  for (int dim = 2; dim <= std::min(max_dim, 4); ++dim)
    tasks.push_back([&X, dim] {
      LoopGroup G(X, Convention::A2B1);
      Families f;
      auto& lemma = f["Tcx(g) degenerate for degenerate x"];
      for (const SimplexRef& x : X.simplices(dim)) {
        if (!x.is_degenerate()) continue;
        for (const Permutation& g : permutations(dim - 1))
          lemma.expect(G.is_degenerate(tcx_perm(G, x, g)), [&] { return X.to_string(x); });
      }
      return f.take();
    });
  return {"twisting", run_checks(tasks)};
}

namespace {

GChain cobar_to_group_ring(const Cobar& C, const LoopGroup& G, const CobarMonomial& m) {
  GChain out(G.identity(0));
  for (GenId g : m) out = dot(G, out, tc(G, C.space().generator(g)));
  return out;
}

GChain cobar_to_group_ring(const Cobar& C, const LoopGroup& G, const CobarChain& c) {
  GChain out;
  for (const auto& [m, k] : c) out.add(cobar_to_group_ring(C, G, m), k);
  return out;
}

}  // namespace

SuiteReport verify_cobar(const SimplicialSet& X, int max_degree, std::uint64_t seed) {
  std::optional<int> cap;
  if (X.generators(1).size() > 0) cap = 3;
  std::vector<Task> tasks;
  for (int k = 0; k <= max_degree; ++k)
    tasks.push_back([&X, k, cap] {
      Cobar C(X);
      Families f;
      auto& dd = f["cobar d^2 = 0"];
      for (const CobarMonomial& m : C.basis(k, cap))
        dd.expect(C.diff(C.diff(m)).empty(), [&] { return C.to_string(m); });
      return f.take();
    });
  tasks.push_back([&X, max_degree, cap, seed] {
    Cobar C(X);
    Families f;
    auto& lb = f["cobar Leibniz rule"];
    std::vector<CobarMonomial> pool;
    for (int k = 0; k <= std::max(1, max_degree / 2); ++k)
      for (const CobarMonomial& m : C.basis(k, cap ? std::optional<int>(2) : std::nullopt)) pool.push_back(m);
    std::mt19937_64 rng(seed);
    for (int c = 0; c < 200 && !pool.empty(); ++c) {
      const CobarMonomial& a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const CobarMonomial& b = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      CobarMonomial ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      CobarChain rhs = C.multiply(C.diff(a), CobarChain(b));
      rhs.add(C.multiply(CobarChain(a), C.diff(b)), C.degree(a) % 2 ? -1 : 1);
      lb.expect(C.diff(ab) == rhs, [&] { return C.to_string(a) + " * " + C.to_string(b); });
    }
    return f.take();
  });
  tasks.push_back([&X, max_degree, seed] {
    Cobar C(X);
    LoopGroup G(X, Convention::A2B1);
    Families f;
    auto& tm = f["T d = -d T on cobar generators"];
    for (int dim = 1; dim <= std::min(X.max_dim(), max_degree + 1); ++dim)
      for (GenId g : X.generators(dim)) {
        CobarMonomial m{g};
        GChain lhs = normalize(G, cobar_to_group_ring(C, G, C.diff(m)));
        GChain rhs = normalize(G, -1 * chain_boundary(G, cobar_to_group_ring(C, G, m)));
        tm.expect(lhs == rhs, [&] { return C.to_string(m) + ": " + chain_string(G, lhs) + " vs " + chain_string(G, rhs); });
      }
    auto& tp = f["T d = -d T on products of two generators"];
    std::vector<GenId> gens;
    for (int dim = 1; dim <= std::min(X.max_dim(), 3); ++dim)
      for (GenId g : X.generators(dim)) gens.push_back(g);
    std::mt19937_64 rng(seed + 7);
    for (int c = 0; c < 20 && !gens.empty(); ++c) {
      CobarMonomial m{gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)],
                      gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)]};
      if (C.degree(m) + 1 > max_degree + 1) continue;
      GChain lhs = normalize(G, cobar_to_group_ring(C, G, C.diff(m)));
      GChain rhs = normalize(G, -1 * chain_boundary(G, cobar_to_group_ring(C, G, m)));
      tp.expect(lhs == rhs, [&] { return C.to_string(m); });
    }
    return f.take();
  });
  return {"cobar", run_checks(tasks)};
}

TwistedSetup default_setup(const SimplicialSet& X, int m) {
  TwistedSetup s;
  s.base = &X;
  s.group = std::make_unique<FiniteGroup>(FiniteGroup::cyclic(m));
  s.action = std::make_unique<GroupAction>(GroupAction::regular(*s.group));
  bool simplex_names = !X.generators(1).empty();
  for (GenId g : X.generators(1))
    if (X.name(g).front() != '[') simplex_names = false;
  std::unique_ptr<TwistingFunction> t;
  if (simplex_names) {
    t = std::make_unique<TwistingFunction>(potential_twist(X, *s.group, range(0, X.max_dim() + 1)));
  } else {
    std::map<GenId, GroupElement> given;
    for (GenId g : X.generators(1)) given[g] = 1 % m;
    t = std::make_unique<TwistingFunction>(TwistingFunction::from_values(X, *s.group, given));
  }
  auto checks = t->check(X.max_dim() + 1);
  bool ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
  if (!ok) t = std::make_unique<TwistingFunction>(TwistingFunction::from_values(X, *s.group, {}));
  s.twist = std::move(t);
  return s;
}

std::vector<std::string> expected_psi_terms(int n) {
  switch (n) {
    case 1: return {"+1 ([01], 1_1)"};
    case 2: return {"+1 ([012], 1_2)", "+1 ([001], tau[0112])"};
    case 3:
      return {"+1 ([0123], 1_3)",
              "+1 ([0112], tau[01223])",
              "-1 ([0011], tau[01112] tau[01123])",
              "+1 ([0001], tau[01112] tau[01223])",
              "-1 ([0012], tau[02223])",
              "-1 ([0001], tau[00112] tau[02223])"};
    default: return {};
  }
}

namespace {

std::string pair_string(const TwistedSetup& s, const SimplexPair& p) {
  return "(" + s.base->to_string(p.first) + ", " + s.action->space().to_string(p.second) + ")";
}

std::vector<CheckResult> universal_checks(int n, std::uint64_t seed) {
  const UniversalSimplex& u = universal_simplex(n);
  Families f;
  const PrincipalChain& psi = psi_universal(n);
  f["standard simplex: d Psi = Psi d"].expect(u.P.diff(psi) == psi_boundary_universal(n), [&] {
    return "n=" + std::to_string(n);
  });
  PrincipalElement lead{u.delta.simplex(range(0, n)), u.G.identity(n)};
  bool ok = psi.coefficient(lead) == 1;
  for (const auto& [e, k] : psi)
    if (!(e == lead) && !e.base.is_degenerate()) ok = false;
  f["standard simplex: Psi = (x, 1) mod lower filtration"].expect(ok, [&] { return "n=" + std::to_string(n); });
  if (n <= 3) {
    auto got = format_universal(u, psi);
    auto want = expected_psi_terms(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    f["closed formulas in dimensions 1-3"].expect(got == want, [&] {
      std::string s;
      for (const auto& t : got) s += t + "; ";
      return "n=" + std::to_string(n) + " got " + s;
    });
  }

  // dD identities on random principal elements of the standard simplex.
  std::mt19937_64 rng(seed + n);
  auto random_map = [&](int len) {
    std::vector<int> v(len);
    for (int& a : v) a = std::uniform_int_distribution<int>(0, n)(rng);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto& dx = f["d_x D + D d_x = id"];
  auto& dt = f["d_tau D = -D d_tau"];
  for (int c = 0; c < 200 && n >= 2; ++c) {
    int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<Letter> ls;
    int len = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k < len; ++k) ls.push_back({u.delta.simplex(random_map(m + 2)), k % 2 ? -1 : 1});
    PrincipalElement e{u.delta.simplex(random_map(m + 1)), u.G.reduce(m, ls)};
    PrincipalChain lhs = u.P.d_times(derive(u, e));
    lhs += derive(u, u.P.d_times(e));
    dx.expect(lhs == PrincipalChain(e), [&] { return u.P.to_string(e); });
    PrincipalChain a = u.P.d_tau(derive(u, e));
    PrincipalChain b = -1 * derive(u, u.P.d_tau(e));
    dt.expect(a == b, [&] { return u.P.to_string(e); });
  }
  // In degree 0 D contracts onto the vertex 0.
  for (int k = 0; k <= n; ++k) {
    PrincipalElement e{u.delta.simplex({k}), u.G.identity(0)};
    PrincipalChain want(e);
    want.add(PrincipalElement{u.delta.simplex({0}), u.G.identity(0)}, -1);
    dx.expect(u.P.d_times(derive(u, e)) == want, [&] { return u.P.to_string(e); });
  }
  auto& fl = f["D raises the filtration only on d_0"];
  for (const SimplexRef& I : u.delta.space().simplices(n - 1)) {
    PrincipalElement e{I, u.G.identity(n - 1)};
    bool top = !derive(u, e).base.is_degenerate();
    fl.expect(top == (u.delta.vertices(I) == range(1, n)), [&] { return u.P.to_string(e); });
  }
  return f.take();
}

}  // namespace

SuiteReport verify_psi(const TwistedSetup& s, int max_dim, std::uint64_t seed) {
  const SimplicialSet& X = *s.base;
  if (!X.is_reduced()) throw InputError("Psi needs a reduced simplicial set");
  std::vector<Task> tasks;
  for (int n = 1; n <= std::min(max_dim, 4); ++n) tasks.push_back([n, seed] { return universal_checks(n, seed); });

  tasks.push_back([&s, max_dim] {
    Families f;
    for (const IdentityCheck& c : s.twist->check(std::min(max_dim, s.base->max_dim() + 1)))
      f["twisting function axioms"].expect(c.passed, [&] { return c.name + ": " + c.detail; });
    TwistedTensorProduct tt(*s.twist, *s.action);
    for (const IdentityCheck& c : tt.morphism().verify(std::min(max_dim, s.base->max_dim() + 1)))
      f["induced morphism is simplicial"].expect(c.passed, [&] { return c.name + ": " + c.detail; });
    return f.take();
  });

  for (int k = 0; k <= max_dim; ++k)
    tasks.push_back([&s, k] {
      Families f;
      TwistedTensorProduct tt(*s.twist, *s.action);
      TwistedCartesianProduct tcp(*s.twist, *s.action);
      LoopGroup G(*s.base, Convention::A2B1);
      PrincipalComplex P(G);
      InducedMorphism mor = InducedMorphism::from_twisting(G, *s.twist);
      auto fmt = [&](const SimplexPair& p) { return pair_string(s, p); };
      for (const SimplexPair& p : tt.basis(k)) {
        f["tensor d^2 = 0"].expect(tt.diff(tt.diff(p)).empty(), [&] { return fmt(p); });
        PairChain lhs = tcp.diff(psi(P, mor, tcp, p.first, p.second));
        PairChain rhs = psi(P, mor, tcp, tt.diff(p));
        f["d Psi = Psi d"].expect(lhs == rhs, [&] { return fmt(p) + ": " + lc_string(lhs, fmt) + " vs " + lc_string(rhs, fmt); });
        bool filt = true;
        for (const auto& [q, c] : psi(P, mor, tcp, p.first, p.second)) {
          SimplexRef y = q.first;
          if (s.base->generator_dim(y.gen) > p.first.dim) filt = false;
        }
        f["Psi preserves the base filtration"].expect(filt, [&] { return fmt(p); });
      }
      for (const SimplexPair& p : tcp.basis(k))
        f["cartesian d^2 = 0"].expect(tcp.diff(tcp.diff(p)).empty(), [&] { return fmt(p); });
      return f.take();
    });

  tasks.push_back([&s, max_dim] {
    Families f;
    const SimplicialSet& X = *s.base;
    LoopGroup G(X, Convention::A2B1);
    PrincipalComplex P(G);
    for (int n = 1; n <= std::min(max_dim, X.max_dim()); ++n)
      for (const SimplexRef& x : X.nondegenerate(n)) {
        PrincipalChain c = psi_unit(P, x);
        PrincipalElement lead{x, G.identity(n)};
        bool ok = c.coefficient(lead) == 1;
        for (const auto& [e, k] : c)
          if (!(e == lead) && !e.base.is_degenerate()) ok = false;
        f["Psi(x (x) 1) = (x, 1) mod lower filtration"].expect(ok, [&] { return X.to_string(x); });
      }
    return f.take();
  });

  // Module actions satisfy the Leibniz rule.
  tasks.push_back([&s, max_dim] {
    Families f;
    const SimplicialSet& X = *s.base;
    const SimplicialSet& Z = s.action->space();
    const FiniteGroup& Gam = *s.group;
    TwistedCartesianProduct tcp(*s.twist, *s.action);
    GroupAction regular = GroupAction::regular(Gam);
    TwistedTensorProduct tt_reg(*s.twist, regular);
    TwistedTensorProduct tt(*s.twist, *s.action);
    auto dz_of = [&](const SimplexRef& z) {
      LinearCombination<SimplexRef> out;
      for (int i = 0; z.dim > 0 && i <= z.dim; ++i) {
        SimplexRef fz = Z.face(z, i);
        if (!fz.is_degenerate()) out.add(fz, i % 2 ? -1 : 1);
      }
      return out;
    };
    auto fmt = [&](const SimplexPair& p) { return pair_string(s, p); };
    int top = std::min(max_dim, 3);
    for (int n = 0; n <= top; ++n)
      for (const SimplexRef& x : X.simplices(n))
        for (int a = 0; a < Gam.order(); ++a)
          for (int t = 0; n + t <= top; ++t)
            for (const SimplexRef& z : Z.nondegenerate(t)) {
              PairChain lhs = tcp.diff(tcp.act(x, a, z));
              PairChain rhs;
              for (int i = 0; n > 0 && i <= n; ++i) {
                GroupElement b = i == n ? Gam.multiply(s.twist->value(x), a) : a;
                rhs.add(tcp.act(X.face(x, i), b, z), i % 2 ? -1 : 1);
              }
              for (const auto& [w, c] : dz_of(z)) rhs.add(tcp.act(x, a, w), n % 2 ? -c : c);
              f["(x, g) . z is a chain map"].expect(lhs == rhs, [&] { return X.to_string(x) + " g=" + Gam.name(a) + " z=" + Z.to_string(z); });
            }
    for (int n = 0; n <= top; ++n)
      for (const SimplexRef& x : X.nondegenerate(n))
        for (int a = 0; a < Gam.order(); ++a)
          for (int t = 0; n + t <= top; ++t)
            for (const SimplexRef& z : Z.nondegenerate(t)) {
              PairChain lhs = tt.diff(SimplexPair{x, s.action->act(a, z)});
              PairChain rhs;
              for (const auto& [p, c] : tt_reg.diff(SimplexPair{x, regular.space().generator(a)}))
                rhs.add(SimplexPair{p.first, s.action->act(p.second.gen, z)}, c);
              for (const auto& [w, c] : dz_of(z)) rhs.add(SimplexPair{x, s.action->act(a, w)}, n % 2 ? -c : c);
              f["(x (x) g) . z is a chain map"].expect(lhs == rhs, [&] {
                return X.to_string(x) + " g=" + Gam.name(a) + " z=" + Z.to_string(z) + ": " + lc_string(lhs, fmt) + " vs " + lc_string(rhs, fmt);
              });
            }
    return f.take();
  });
  return {"psi", run_checks(tasks)};
}

SuiteReport verify_psi(const SimplicialSet& X, int max_dim, std::uint64_t seed) {
  TwistedSetup s = default_setup(X, 3);
  return verify_psi(s, max_dim, seed);
}

}  // namespace looptor
