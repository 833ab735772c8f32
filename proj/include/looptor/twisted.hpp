#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "looptor/homology.hpp"
#include "looptor/linear_combination.hpp"
#include "looptor/loop_group.hpp"
#include "looptor/prism.hpp"
#include "looptor/simplicial.hpp"
#include "looptor/twisting_cochain.hpp"

namespace looptor {

using GroupElement = int;

/// A finite group, viewed as a constant simplicial group (all faces and degeneracies are the
/// identity map). Element 0 is the identity.
class FiniteGroup {
 public:
  /// Validates the group axioms. table[a][b] = a * b.
  static FiniteGroup from_table(std::vector<std::string> names, std::vector<std::vector<int>> table);
  static FiniteGroup cyclic(int m);

  int order() const { return static_cast<int>(names_.size()); }
  GroupElement identity() const { return 0; }
  GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a][b]; }
  GroupElement inverse(GroupElement a) const { return inverse_[a]; }
  const std::string& name(GroupElement a) const { return names_.at(a); }
  GroupElement find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

using GroupRingChain = LinearCombination<GroupElement>;

/// A left action of a finite group on a finite simplicial set by automorphisms, given on
/// generators.
class GroupAction {
 public:
  /// images[a][g] is the generator a . g. Validated: dimensions, faces, action axioms.
  GroupAction(SimplicialSet Z, const FiniteGroup& group, std::vector<std::vector<GenId>> images);
  static GroupAction trivial(SimplicialSet Z, const FiniteGroup& group);
  /// The group acting on itself (a discrete simplicial set) by left multiplication.
  static GroupAction regular(const FiniteGroup& group);

  const SimplicialSet& space() const { return Z_; }
  const FiniteGroup& group() const { return *group_; }
  SimplexRef act(GroupElement a, const SimplexRef& z) const;

 private:
  SimplicialSet Z_;
  const FiniteGroup* group_;
  std::vector<std::vector<GenId>> images_;
};

/// A twisting function X -> group (constant), in the A2B1 form.
class TwistingFunction {
 public:
  TwistingFunction(const SimplicialSet& X, const FiniteGroup& group) : X_(&X), group_(&group) {}
  /// Values on generators; edges default to the identity, higher generators are derived from
  /// tau x = (tau d_n x)^{-1} (tau d_{n-1} x) unless given.
  static TwistingFunction from_values(const SimplicialSet& X, const FiniteGroup& group,
                                      const std::map<GenId, GroupElement>& given);

  const SimplicialSet& space() const { return *X_; }
  const FiniteGroup& group() const { return *group_; }
  /// Forces a value on one simplex (degenerate ones included); for testing the axiom checker.
  void set_value(const SimplexRef& x, GroupElement a) { overrides_[x] = a; }
  GroupElement value(const SimplexRef& x) const;
  std::vector<IdentityCheck> check(int max_dim) const;

 private:
  const SimplicialSet* X_;
  const FiniteGroup* group_;
  std::vector<GroupElement> gen_values_;
  std::map<SimplexRef, GroupElement> overrides_;
};

/// Homomorphism G X -> group determined by an assignment on letters tau(y).
class InducedMorphism {
 public:
  InducedMorphism(const LoopGroup& G, const FiniteGroup& group, std::function<GroupElement(const SimplexRef&)> assign)
      : G_(&G), group_(&group), assign_(std::move(assign)) {}
  static InducedMorphism from_twisting(const LoopGroup& G, const TwistingFunction& tau);

  GroupElement apply(const GroupWord& w) const;
  GroupRingChain apply(const GChain& c) const;
  /// Simpliciality on every letter of dimension <= max_dim.
  std::vector<IdentityCheck> verify(int max_dim) const;

 private:
  const LoopGroup* G_;
  const FiniteGroup* group_;
  std::function<GroupElement(const SimplexRef&)> assign_;
};

/// Pair of simplices: (x, z) in the twisted cartesian product, x tensor z in the twisted tensor product.
using SimplexPair = std::pair<SimplexRef, SimplexRef>;
using PairChain = LinearCombination<SimplexPair>;

bool is_degenerate_pair(const SimplexPair& p);

/// Shuffle action of a group-ring chain of grade q on z: sum over Shuf(a^q, b^t) of (s_b g)(s_a z).
LinearCombination<SimplexRef> act_chain(const GroupAction& action, const GroupRingChain& g, int q, const SimplexRef& z);

/// Normalized chains of X x_tau Z.
class TwistedCartesianProduct {
 public:
  TwistedCartesianProduct(const TwistingFunction& tau, const GroupAction& action);

  std::vector<SimplexPair> basis(int n) const;
  PairChain diff(const SimplexPair& p) const;
  PairChain diff(const PairChain& c) const;
  /// (x, a) . z: sum over Shuf(a^n, b^t) of (s_b x, a . s_a z).
  PairChain act(const SimplexRef& x, GroupElement a, const SimplexRef& z) const;
  ChainComplex complex(int top) const;

  const TwistingFunction& twist() const { return *tau_; }
  const GroupAction& action() const { return *action_; }

 private:
  const TwistingFunction* tau_;
  const GroupAction* action_;
};

/// Normalized twisted tensor product RX (x)_phi RZ.
class TwistedTensorProduct {
 public:
  TwistedTensorProduct(const TwistingFunction& tau, const GroupAction& action);

  std::vector<SimplexPair> basis(int k) const;
  PairChain diff_tensor(const SimplexPair& p) const;
  PairChain diff_phi(const SimplexPair& p) const;
  PairChain diff(const SimplexPair& p) const;
  PairChain diff(const PairChain& c) const;
  ChainComplex complex(int top) const;

  const LoopGroup& loop_group() const { return G_; }
  const InducedMorphism& morphism() const { return morphism_; }
  const TwistingFunction& twist() const { return *tau_; }
  const GroupAction& action() const { return *action_; }

 private:
  const TwistingFunction* tau_;
  const GroupAction* action_;
  LoopGroup G_;
  InducedMorphism morphism_;
};

struct HomologyComparison {
  std::vector<HomologyGroup> tensor;
  std::vector<HomologyGroup> cartesian;
  bool equal() const { return tensor == cartesian; }
};

HomologyComparison compare_homology(const TwistingFunction& tau, const GroupAction& action, int max_degree);

/// Twist on a reduced simplex from vertex potentials: tau [a, b] = c_b - c_a in Z/m.
TwistingFunction potential_twist(const SimplicialSet& reduced_simplex, const FiniteGroup& cyclic,
                                 const std::vector<int>& potentials);

}  // namespace looptor
