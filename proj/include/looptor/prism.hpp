#pragma once

#include <string>
#include <vector>

#include "looptor/loop_group.hpp"
#include "looptor/simplicial.hpp"

namespace looptor {

/// Elementary prism (x, i)^e with x in X_{n+1}, 0 <= i <= n. For e = +1 it goes from d_{i+1}x
/// to d_i x.
struct Prism {
  SimplexRef simplex;
  int position = 0;
  int exponent = 1;

  auto operator<=>(const Prism&) const = default;
  bool operator==(const Prism&) const = default;
};

/// A composable, reduced word of elementary prisms in dimension n, starting at `source`.
struct PrismWord {
  int dim = 0;
  SimplexRef source;
  SimplexRef target;
  std::vector<Prism> letters;

  auto operator<=>(const PrismWord&) const = default;
  bool operator==(const PrismWord&) const = default;
};

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // both normal forms on failure
};

class PrismCalculus {
 public:
  explicit PrismCalculus(const SimplicialSet& X) : X_(&X) {}

  const SimplicialSet& space() const { return *X_; }

  SimplexRef source_of(const Prism& p) const;
  SimplexRef target_of(const Prism& p) const;
  bool is_identity_letter(const Prism& p) const;

  PrismWord identity(const SimplexRef& x) const { return {x.dim, x, x, {}}; }
  /// Checks chaining, cancels inverse pairs and erases identity letters.
  PrismWord make(const SimplexRef& source, std::vector<Prism> letters) const;
  PrismWord multiply(const PrismWord& a, const PrismWord& b) const;
  PrismWord inverse(const PrismWord& w) const;

  PrismWord face(const PrismWord& w, int j) const;
  PrismWord degeneracy(const PrismWord& w, int j) const;

  /// The pseudosection: a path from x to the base point (X reduced).
  PrismWord iota(const SimplexRef& x) const;
  /// (iota d_n x)^{-1} (x, n-1) (iota d_{n-1} x), a loop at the base point in dimension n-1.
  PrismWord tau(const SimplexRef& x) const;
  /// Image of a word of G_n X (A2B1 letters) in the loop group of prisms.
  PrismWord embed(const GroupWord& w) const;

  /// The six identity families relating iota, tau, faces and degeneracies at x.
  std::vector<IdentityCheck> verify_pseudosection(const SimplexRef& x) const;

  std::string to_string(const PrismWord& w) const;

 private:
  const SimplicialSet* X_;
};

}  // namespace looptor
