#include "looptor/twisted.hpp"

#include <algorithm>

#include "looptor/error.hpp"

namespace looptor {

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("group has no elements");
  if (static_cast<int>(table.size()) != n) throw InputError("group table has the wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table has the wrong number of columns");
    for (int v : row)
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) throw InputError("element 0 of a group table must be the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw InputError("group table is not associative");
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == 0) g.inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse_[a] < 0 || g.table_[g.inverse_[a]][a] != 0) throw InputError("group table has no inverse for an element");
  return g;
}

FiniteGroup FiniteGroup::cyclic(int m) {
  if (m < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  }
  return from_table(std::move(names), std::move(table));
}

GroupElement FiniteGroup::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown group element '" + name + "'");
  return static_cast<GroupElement>(it - names_.begin());
}

GroupAction::GroupAction(SimplicialSet Z, const FiniteGroup& group, std::vector<std::vector<GenId>> images)
    : Z_(std::move(Z)), group_(&group), images_(std::move(images)) {
  int n = Z_.num_generators();
  if (static_cast<int>(images_.size()) != group.order()) throw InputError("action needs one row per group element");
  for (const auto& row : images_) {
    if (static_cast<int>(row.size()) != n) throw InputError("action row must list every fiber generator");
    std::vector<bool> seen(n, false);
    for (GenId g = 0; g < n; ++g) {
      GenId h = row[g];
      if (h < 0 || h >= n) throw InputError("action image out of range");
      if (Z_.generator_dim(h) != Z_.generator_dim(g))
        throw InputError("action maps '" + Z_.name(g) + "' to a generator of another dimension");
      if (seen[h]) throw InputError("action is not a bijection on generators");
      seen[h] = true;
    }
  }
  for (GenId g = 0; g < n; ++g)
    if (images_[0][g] != g) throw InputError("the identity must act trivially");
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b)
      for (GenId g = 0; g < n; ++g)
        if (images_[group.multiply(a, b)][g] != images_[a][images_[b][g]])
          throw InputError("action is not compatible with the group law");
  for (int a = 0; a < group.order(); ++a)
    for (GenId g = 0; g < n; ++g) {
      SimplexRef y = Z_.generator(g);
      for (int i = 0; y.dim > 0 && i <= y.dim; ++i)
        if (Z_.face(act(a, y), i) != act(a, Z_.face(y, i)))
          throw InputError("action does not commute with d_" + std::to_string(i) + " on '" + Z_.name(g) + "'");
    }
}

GroupAction GroupAction::trivial(SimplicialSet Z, const FiniteGroup& group) {
  std::vector<GenId> row(Z.num_generators());
  for (GenId g = 0; g < Z.num_generators(); ++g) row[g] = g;
  std::vector<std::vector<GenId>> images(group.order(), row);
  return GroupAction(std::move(Z), group, std::move(images));
}

GroupAction GroupAction::regular(const FiniteGroup& group) {
  SimplicialSetDesc d;
  for (int a = 0; a < group.order(); ++a) d.generators.emplace_back(group.name(a), 0);
  std::vector<std::vector<GenId>> images(group.order(), std::vector<GenId>(group.order()));
  for (int a = 0; a < group.order(); ++a)
    for (int b = 0; b < group.order(); ++b) images[a][b] = group.multiply(a, b);
  return GroupAction(SimplicialSet::load(d), group, std::move(images));
}

SimplexRef GroupAction::act(GroupElement a, const SimplexRef& z) const {
  SimplexRef r = z;
  r.gen = images_.at(a).at(z.gen);
  return r;
}

TwistingFunction TwistingFunction::from_values(const SimplicialSet& X, const FiniteGroup& group,
                                               const std::map<GenId, GroupElement>& given) {
  TwistingFunction t(X, group);
  t.gen_values_.assign(X.num_generators(), group.identity());
  for (const auto& [g, a] : given) {
    if (g < 0 || g >= X.num_generators()) throw InputError("twist value for an unknown generator");
    if (X.generator_dim(g) == 0) throw InputError("twist value given on vertex '" + X.name(g) + "'");
    if (a < 0 || a >= group.order()) throw InputError("twist value outside the group");
  }
  for (int n = 1; n <= X.max_dim(); ++n)
    for (GenId g : X.generators(n)) {
      if (auto it = given.find(g); it != given.end()) {
        t.gen_values_[g] = it->second;
      } else if (n >= 2) {
        SimplexRef x = X.generator(g);
        t.gen_values_[g] = group.multiply(group.inverse(t.value(X.face(x, n))), t.value(X.face(x, n - 1)));
      }
    }
  return t;
}

GroupElement TwistingFunction::value(const SimplexRef& x) const {
  if (x.dim < 1) throw InputError("twisting function is not defined on vertices");
  if (auto it = overrides_.find(x); it != overrides_.end()) return it->second;
  if (x.has_degeneracy(x.dim - 1)) return group_->identity();
  if (gen_values_.empty()) return group_->identity();
  return gen_values_.at(x.gen);
}

std::vector<IdentityCheck> TwistingFunction::check(int max_dim) const {
  std::vector<IdentityCheck> out;
  const FiniteGroup& G = *group_;
  auto fail = [&](std::string name, const SimplexRef& x, GroupElement lhs, GroupElement rhs) {
    out.push_back({std::move(name) + " at " + X_->to_string(x), false, G.name(lhs) + " != " + G.name(rhs)});
  };
  std::size_t checks = 0;
  for (int n = 1; n <= max_dim; ++n)
    for (const SimplexRef& x : X_->simplices(n)) {
      GroupElement tx = value(x);
      for (int i = 0; n >= 2 && i < n - 1; ++i, ++checks)
        if (value(X_->face(x, i)) != tx) fail("d_" + std::to_string(i) + " tau = tau d_" + std::to_string(i), x, tx, value(X_->face(x, i)));
      if (n >= 2) {
        ++checks;
        GroupElement rhs = G.multiply(G.inverse(value(X_->face(x, n))), value(X_->face(x, n - 1)));
        if (rhs != tx) fail("d_{n-1} tau = (tau d_n)^-1 (tau d_{n-1})", x, tx, rhs);
      }
      for (int i = 0; i < n; ++i, ++checks)
        if (value(X_->degeneracy(x, i)) != tx) fail("s_" + std::to_string(i) + " tau = tau s_" + std::to_string(i), x, value(X_->degeneracy(x, i)), tx);
      ++checks;
      if (value(X_->degeneracy(x, n)) != G.identity()) fail("tau s_n = 1", x, value(X_->degeneracy(x, n)), G.identity());
    }
  if (out.empty()) out.push_back({"twisting axioms (" + std::to_string(checks) + " cases)", true, {}});
  return out;
}

InducedMorphism InducedMorphism::from_twisting(const LoopGroup& G, const TwistingFunction& tau) {
  return InducedMorphism(G, tau.group(), [&tau](const SimplexRef& y) { return tau.value(y); });
}

GroupElement InducedMorphism::apply(const GroupWord& w) const {
  GroupElement r = group_->identity();
  for (const Letter& l : w.letters) {
    GroupElement a = assign_(l.simplex);
    r = group_->multiply(r, l.exponent > 0 ? a : group_->inverse(a));
  }
  return r;
}

GroupRingChain InducedMorphism::apply(const GChain& c) const {
  GroupRingChain out;
  for (const auto& [w, k] : c) out.add(apply(w), k);
  return out;
}

std::vector<IdentityCheck> InducedMorphism::verify(int max_dim) const {
  std::vector<IdentityCheck> out;
  const SimplicialSet& X = G_->space();
  for (int m = 1; m <= max_dim; ++m)
    for (const SimplexRef& y : X.simplices(m)) {
      GroupWord w = G_->tau(y);
      GroupElement img = apply(w);
      int n = w.dim;
      for (int i = 0; n >= 1 && i <= n; ++i) {
        GroupElement f = apply(G_->face(w, i));
        if (f != img)
          out.push_back({"d_" + std::to_string(i) + " on tau(" + X.to_string(y) + ")", false,
                         group_->name(f) + " != " + group_->name(img)});
      }
      for (int i = 0; i <= n; ++i) {
        GroupElement s = apply(G_->degeneracy(w, i));
        if (s != img)
          out.push_back({"s_" + std::to_string(i) + " on tau(" + X.to_string(y) + ")", false,
                         group_->name(s) + " != " + group_->name(img)});
      }
    }
  if (out.empty()) out.push_back({"induced morphism is simplicial", true, {}});
  return out;
}

bool is_degenerate_pair(const SimplexPair& p) {
  for (int i : p.first.degeneracies)
    if (p.second.has_degeneracy(i)) return true;
  return false;
}

LinearCombination<SimplexRef> act_chain(const GroupAction& action, const GroupRingChain& g, int q, const SimplexRef& z) {
  LinearCombination<SimplexRef> out;
  for (const ShuffleWord& w : shuffles(q, z.dim)) {
    SimplexRef sz = apply_degeneracies(action.space(), z, w.a_degeneracies());
    for (const auto& [a, k] : g) out.add(action.act(a, sz), w.sign ? -k : k);
  }
  return out;
}

namespace {

void add_normalized(PairChain& out, SimplexPair p, Coefficient c) {
  if (!is_degenerate_pair(p)) out.add(p, c);
}

}  // namespace

TwistedCartesianProduct::TwistedCartesianProduct(const TwistingFunction& tau, const GroupAction& action)
    : tau_(&tau), action_(&action) {
  if (&tau.group() != &action.group() && tau.group().order() != action.group().order())
    throw InputError("twist and action use different groups");
}

std::vector<SimplexPair> TwistedCartesianProduct::basis(int n) const {
  std::vector<SimplexPair> out;
  auto xs = tau_->space().simplices(n);
  auto zs = action_->space().simplices(n);
  for (const auto& x : xs)
    for (const auto& z : zs)
      if (!is_degenerate_pair({x, z})) out.push_back({x, z});
  return out;
}

PairChain TwistedCartesianProduct::diff(const SimplexPair& p) const {
  const auto& [x, z] = p;
  if (x.dim != z.dim) throw InputError("cartesian pair with mismatched dimensions");
  PairChain out;
  int n = x.dim;
  if (n == 0) return out;
  const SimplicialSet& X = tau_->space();
  const SimplicialSet& Z = action_->space();
  for (int i = 0; i < n; ++i) add_normalized(out, {X.face(x, i), Z.face(z, i)}, i % 2 ? -1 : 1);
  add_normalized(out, {X.face(x, n), action_->act(tau_->value(x), Z.face(z, n))}, n % 2 ? -1 : 1);
  return out;
}

PairChain TwistedCartesianProduct::diff(const PairChain& c) const {
  PairChain out;
  for (const auto& [p, k] : c) out.add(diff(p), k);
  return out;
}

PairChain TwistedCartesianProduct::act(const SimplexRef& x, GroupElement a, const SimplexRef& z) const {
  PairChain out;
  for (const ShuffleWord& w : shuffles(x.dim, z.dim)) {
    SimplexRef sx = apply_degeneracies(tau_->space(), x, w.b_degeneracies());
    SimplexRef sz = action_->act(a, apply_degeneracies(action_->space(), z, w.a_degeneracies()));
    add_normalized(out, {sx, sz}, w.sign ? -1 : 1);
  }
  return out;
}

ChainComplex TwistedCartesianProduct::complex(int top) const {
  std::vector<std::vector<SimplexPair>> bases(top + 1);
  for (int k = 0; k <= top; ++k) bases[k] = basis(k);
  std::function<PairChain(const SimplexPair&)> d = [this](const SimplexPair& p) { return diff(p); };
  return make_complex(bases, d);
}

TwistedTensorProduct::TwistedTensorProduct(const TwistingFunction& tau, const GroupAction& action)
    : tau_(&tau),
      action_(&action),
      G_(tau.space(), Convention::A2B1),
      morphism_(InducedMorphism::from_twisting(G_, tau)) {}

std::vector<SimplexPair> TwistedTensorProduct::basis(int k) const {
  std::vector<SimplexPair> out;
  for (int n = 0; n <= k; ++n)
    for (const auto& x : tau_->space().nondegenerate(n))
      for (const auto& z : action_->space().nondegenerate(k - n)) out.push_back({x, z});
  return out;
}

PairChain TwistedTensorProduct::diff_tensor(const SimplexPair& p) const {
  const auto& [x, z] = p;
  const SimplicialSet& X = tau_->space();
  const SimplicialSet& Z = action_->space();
  PairChain out;
  for (int i = 0; x.dim > 0 && i <= x.dim; ++i) {
    SimplexRef f = X.face(x, i);
    if (!f.is_degenerate()) out.add({f, z}, i % 2 ? -1 : 1);
  }
  int sign = x.dim % 2 ? -1 : 1;
  for (int i = 0; z.dim > 0 && i <= z.dim; ++i) {
    SimplexRef f = Z.face(z, i);
    if (!f.is_degenerate()) out.add({x, f}, i % 2 ? -sign : sign);
  }
  return out;
}

PairChain TwistedTensorProduct::diff_phi(const SimplexPair& p) const {
  const auto& [x, z] = p;
  const SimplicialSet& X = tau_->space();
  int n = x.dim;
  PairChain out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> front, back;
    for (int a = 0; a <= i; ++a) front.push_back(a);
    for (int a = i; a <= n; ++a) back.push_back(a);
    SimplexRef head = X.apply_map(x, front);
    if (head.is_degenerate()) continue;
    GroupRingChain ph = morphism_.apply(phi(G_, X.apply_map(x, back)));
    for (const auto& [w, k] : act_chain(*action_, ph, n - i - 1, z))
      if (!w.is_degenerate()) out.add({head, w}, n % 2 ? -k : k);
  }
  return out;
}

PairChain TwistedTensorProduct::diff(const SimplexPair& p) const {
  PairChain out = diff_tensor(p);
  out += diff_phi(p);
  return out;
}

PairChain TwistedTensorProduct::diff(const PairChain& c) const {
  PairChain out;
  for (const auto& [p, k] : c) out.add(diff(p), k);
  return out;
}

ChainComplex TwistedTensorProduct::complex(int top) const {
  std::vector<std::vector<SimplexPair>> bases(top + 1);
  for (int k = 0; k <= top; ++k) bases[k] = basis(k);
  std::function<PairChain(const SimplexPair&)> d = [this](const SimplexPair& p) { return diff(p); };
  return make_complex(bases, d);
}

HomologyComparison compare_homology(const TwistingFunction& tau, const GroupAction& action, int max_degree) {
  TwistedTensorProduct tt(tau, action);
  TwistedCartesianProduct tcp(tau, action);
  ChainComplex a = tt.complex(max_degree + 1);
  ChainComplex b = tcp.complex(max_degree + 1);
  a.check();
  b.check();
  return {homology_table(a, max_degree), homology_table(b, max_degree)};
}

TwistingFunction potential_twist(const SimplicialSet& X, const FiniteGroup& group, const std::vector<int>& potentials) {
  std::map<GenId, GroupElement> given;
  int m = group.order();
  for (GenId g : X.generators(1)) {
    const std::string& name = X.name(g);  // "[a,b]"
    auto comma = name.find(',');
    if (name.size() < 5 || name.front() != '[' || comma == std::string::npos)
      throw InputError("potential twist needs edges named [a,b]");
    int a = std::stoi(name.substr(1, comma - 1));
    int b = std::stoi(name.substr(comma + 1));
    if (a >= static_cast<int>(potentials.size()) || b >= static_cast<int>(potentials.size()))
      throw InputError("too few vertex potentials");
    given[g] = (((potentials[b] - potentials[a]) % m) + m) % m;
  }
  return TwistingFunction::from_values(X, group, given);
}

}  // namespace looptor
