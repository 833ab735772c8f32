#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "looptor/simplicial.hpp"

namespace looptor {

/// The four twisting-function conventions for Kan's loop group. A2 conventions drop the top
/// degeneracies s_n as generators; A1 conventions drop s_0. B1/B2 fix the order of the
/// twisted face.
enum class Convention { A1B1, A1B2, A2B1, A2B2 };

inline constexpr Convention kAllConventions[] = {Convention::A1B1, Convention::A1B2, Convention::A2B1,
                                                 Convention::A2B2};

std::string to_string(Convention c);
Convention parse_convention(std::string_view s);

struct Letter {
  SimplexRef simplex;  // in X_{n+1} for a word in G_n
  int exponent = 1;    // +1 or -1

  auto operator<=>(const Letter&) const = default;
  bool operator==(const Letter&) const = default;
};

/// Reduced word in G_n X.
struct GroupWord {
  int dim = 0;
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  auto operator<=>(const GroupWord&) const = default;
  bool operator==(const GroupWord&) const = default;
};

/// Kan's loop group of a simplicial set, as a free simplicial group on the letters tau(y).
class LoopGroup {
 public:
  LoopGroup(const SimplicialSet& X, Convention conv) : X_(&X), conv_(conv) {}

  const SimplicialSet& space() const { return *X_; }
  Convention convention() const { return conv_; }

  /// True when tau(y) is the identity under the active convention.
  bool excluded(const SimplexRef& y) const;

  GroupWord identity(int n) const { return {n, {}}; }
  /// tau(x) in G_{dim x - 1}.
  GroupWord tau(const SimplexRef& x) const;
  GroupWord tau_inverse(const SimplexRef& x) const;

  /// Free reduction plus erasure of excluded letters; throws on dimension mismatch.
  GroupWord reduce(int dim, std::vector<Letter> letters) const;
  GroupWord multiply(const GroupWord& a, const GroupWord& b) const;
  GroupWord inverse(const GroupWord& w) const;

  GroupWord face(const GroupWord& w, int i) const;
  GroupWord degeneracy(const GroupWord& w, int i) const;
  /// Smallest i with s_i d_i w = w.
  std::optional<int> degenerate_index(const GroupWord& w) const;
  bool is_degenerate(const GroupWord& w) const { return degenerate_index(w).has_value(); }

  std::string to_string(const GroupWord& w) const;

 private:
  std::vector<Letter> letter_face(const SimplexRef& y, int n, int i) const;

  const SimplicialSet* X_;
  Convention conv_;
};

/// Applies a simplicial map letterwise (the induced map of loop groups).
GroupWord push_word(const SimplicialMap& f, const LoopGroup& target, const GroupWord& w);

}  // namespace looptor
