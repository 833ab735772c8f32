#pragma once

#include <string>
#include <vector>

#include "looptor/builtins.hpp"
#include "looptor/linear_combination.hpp"
#include "looptor/loop_group.hpp"
#include "looptor/twisted.hpp"
#include "looptor/twisting_cochain.hpp"

namespace looptor {

/// (x, g) in X x_tau GX, with dim x = dim g.
struct PrincipalElement {
  SimplexRef base;
  GroupWord fiber;

  auto operator<=>(const PrincipalElement&) const = default;
  bool operator==(const PrincipalElement&) const = default;
};

using PrincipalChain = LinearCombination<PrincipalElement>;

/// Chains on the principal twisted cartesian product X x_tau GX (A2B1 loop group).
class PrincipalComplex {
 public:
  explicit PrincipalComplex(const LoopGroup& G);

  const LoopGroup& loop_group() const { return *G_; }
  /// Sum of (-1)^i (d_i x, d_i g) over all i.
  PrincipalChain d_times(const PrincipalElement& e) const;
  /// (-1)^m (d_m x, (tau x - 1) d_m g).
  PrincipalChain d_tau(const PrincipalElement& e) const;
  PrincipalChain diff(const PrincipalElement& e) const;
  PrincipalChain diff(const PrincipalChain& c) const;
  bool is_degenerate(const PrincipalElement& e) const;
  PrincipalChain normalize(const PrincipalChain& c) const;
  /// Right action of the group ring: (x, g) . h = sum over Shuf(a^m, b^q) of (s_b x, (s_b g)(s_a h)).
  PrincipalChain act(const PrincipalChain& c, const GChain& h) const;
  std::string to_string(const PrincipalElement& e) const;

 private:
  const LoopGroup* G_;
};

/// The standard simplex with its loop group and principal complex.
struct UniversalSimplex {
  explicit UniversalSimplex(int n) : delta(n), G(delta.space(), Convention::A2B1), P(G) {}
  StandardSimplex delta;
  LoopGroup G;
  PrincipalComplex P;
};

/// Psi(i_n (x) 1) computed once per dimension on the standard simplex, where every face is an
/// increasing map into [n]. Thread-safe.
const UniversalSimplex& universal_simplex(int n);
/// The derivation: prepends vertex 0 to the base and to every letter.
PrincipalElement derive(const UniversalSimplex& u, const PrincipalElement& e);
PrincipalChain derive(const UniversalSimplex& u, const PrincipalChain& c);
/// Pushes a chain on Delta^m to Delta^n along the vertex map f : [m] -> [n].
PrincipalChain push_universal(const UniversalSimplex& from, const UniversalSimplex& to, const std::vector<int>& f,
                              const PrincipalChain& c);
/// Psi applied to d(i_n (x) 1), normalized.
const PrincipalChain& psi_boundary_universal(int n);
/// Psi(i_n (x) 1), normalized.
const PrincipalChain& psi_universal(int n);
/// Canonical one-line-per-term rendering: "+1 ([0,0,1], tau[0,1,1,2])", sorted.
std::vector<std::string> format_universal(const UniversalSimplex& u, const PrincipalChain& c);

/// Psi(x (x) 1) in X x_tau GX, normalized.
PrincipalChain psi_unit(const PrincipalComplex& P, const SimplexRef& x);
/// Psi(x (x) z) in X x_tau Z.
PairChain psi(const PrincipalComplex& P, const InducedMorphism& m, const TwistedCartesianProduct& tcp,
              const SimplexRef& x, const SimplexRef& z);
PairChain psi(const PrincipalComplex& P, const InducedMorphism& m, const TwistedCartesianProduct& tcp,
              const PairChain& c);

}  // namespace looptor
