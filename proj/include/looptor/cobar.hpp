#pragma once

#include <optional>
#include <string>
#include <vector>

#include "looptor/homology.hpp"
#include "looptor/linear_combination.hpp"
#include "looptor/simplicial.hpp"

namespace looptor {

/// A word c x_1 ... c x_k in nondegenerate simplices of positive dimension; empty = unit.
using CobarMonomial = std::vector<GenId>;
using CobarChain = LinearCombination<CobarMonomial>;

/// Adams' cobar construction on a finite simplicial set.
class Cobar {
 public:
  explicit Cobar(const SimplicialSet& X);

  const SimplicialSet& space() const { return *X_; }
  int degree(const CobarMonomial& m) const;
  bool has_degree_zero_generators() const { return !X_->generators(1).empty(); }

  /// All monomials of degree k. Without a length cap, throws InfiniteBasisError when X has
  /// nondegenerate edges.
  std::vector<CobarMonomial> basis(int k, std::optional<int> max_length = std::nullopt) const;

  /// <y>: the generator c y, the unit for a degenerate edge, zero for other degenerate y.
  CobarChain bracket(const SimplexRef& y) const;
  CobarChain generator_diff(GenId g) const;
  CobarChain diff(const CobarMonomial& m) const;
  CobarChain diff(const CobarChain& c) const;
  CobarChain multiply(const CobarChain& a, const CobarChain& b) const;

  /// Complex in degrees 0..top; requires finite bases.
  ChainComplex complex(int top) const;
  std::vector<HomologyGroup> homology(int max_degree) const;

  std::string to_string(const CobarMonomial& m) const;

 private:
  const SimplicialSet* X_;
  std::vector<GenId> gens_;  // positive-dimensional generators in id order
};

}  // namespace looptor
