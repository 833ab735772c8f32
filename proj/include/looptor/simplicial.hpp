#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace looptor {

using GenId = int;

/// A simplex in Eilenberg-Zilber normal form: s_{j_1} ... s_{j_k} y with j_1 > ... > j_k and y a
/// nondegenerate generator. Equality of normal forms is equality of simplices.
struct SimplexRef {
  GenId gen = -1;
  std::vector<int> degeneracies;  // j_1 > j_2 > ... > j_k
  int dim = 0;

  bool is_degenerate() const { return !degeneracies.empty(); }
  /// True when some s_i with i in the degeneracy word; i.e. x = s_i d_i x.
  bool has_degeneracy(int i) const;

  auto operator<=>(const SimplexRef&) const = default;
  bool operator==(const SimplexRef&) const = default;
};

/// Weakly increasing f : [m] -> [n], stored as its values f(0..m).
struct IncreasingMap {
  std::vector<int> values;
  int target = 0;

  int source_arity() const { return static_cast<int>(values.size()) - 1; }

  static IncreasingMap identity(int n);
  /// delta^i : [n-1] -> [n], skipping i (the map behind d_i).
  static IncreasingMap coface(int n, int i);
  /// sigma^i : [n+1] -> [n], hitting i twice (the map behind s_i).
  static IncreasingMap codegeneracy(int n, int i);

  /// (*this) o inner.
  IncreasingMap compose(const IncreasingMap& inner) const;
  /// Throws InputError unless the values are weakly increasing within [0, target].
  void validate() const;

  auto operator<=>(const IncreasingMap&) const = default;
  bool operator==(const IncreasingMap&) const = default;
};

/// Degeneracy word of a monotone surjection: the positions i with eta(i) == eta(i+1), decreasing.
std::vector<int> degeneracies_of_surjection(std::span<const int> eta);
/// The monotone surjection [dim] -> [dim - k] encoded by a normal-form degeneracy word.
std::vector<int> surjection_of_degeneracies(std::span<const int> degeneracies, int dim);

struct FaceEntry {
  std::vector<int> degeneracies;
  std::string generator;
};

/// Input description: nondegenerate generators with the faces of each one.
struct SimplicialSetDesc {
  std::vector<std::pair<std::string, int>> generators;  // name, dimension (in order)
  std::map<std::string, std::vector<FaceEntry>> faces;  // d_0 .. d_n of each generator of dim n >= 1
  std::string basepoint;
};

/// A finite simplicial set given by nondegenerate generators and their face table. Immutable
/// after load; all operations are const and thread-safe.
class SimplicialSet {
 public:
  /// Validates the table (dimensions, normal forms, simplicial identities).
  static SimplicialSet load(const SimplicialSetDesc& desc);

  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::string& name(GenId g) const { return names_.at(g); }
  int generator_dim(GenId g) const { return dims_.at(g); }
  std::optional<GenId> find(std::string_view name) const;
  std::span<const GenId> generators(int dim) const;
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Nondegenerate simplex counts in dimensions 0..max_dim.
  std::vector<int> counts() const;

  bool is_reduced() const { return generators(0).size() == 1; }
  GenId basepoint() const { return basepoint_; }
  /// The base point degenerated up to dimension n.
  SimplexRef base_simplex(int n) const;

  SimplexRef generator(GenId g) const { return {g, {}, dims_.at(g)}; }
  SimplexRef face(const SimplexRef& x, int i) const;
  SimplexRef degeneracy(const SimplexRef& x, int i) const;
  /// X(f)(x): the (possibly degenerate) face [f_0, ..., f_m]_x.
  SimplexRef apply_map(const SimplexRef& x, const IncreasingMap& f) const;
  SimplexRef apply_map(const SimplexRef& x, std::span<const int> values) const;

  /// Every simplex of dimension n, nondegenerate and degenerate, in a fixed order.
  std::vector<SimplexRef> simplices(int n) const;
  std::vector<SimplexRef> nondegenerate(int n) const;

  std::string to_string(const SimplexRef& x) const;
  const std::vector<SimplexRef>& face_table(GenId g) const { return faces_.at(g); }
  SimplicialSetDesc describe() const;

 private:
  SimplexRef pull_generator(GenId y, std::vector<int> h) const;
  void check_identities(GenId g) const;

  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::vector<std::vector<GenId>> by_dim_;
  std::vector<std::vector<SimplexRef>> faces_;
  std::map<std::string, GenId, std::less<>> index_;
  GenId basepoint_ = -1;
};

/// A simplicial map given on generators; extended to degenerate simplices by naturality.
class SimplicialMap {
 public:
  /// Throws InputError unless images have the right dimensions and commute with faces.
  SimplicialMap(const SimplicialSet& source, const SimplicialSet& target,
                std::vector<SimplexRef> images);

  SimplexRef operator()(const SimplexRef& x) const;
  const SimplicialSet& source() const { return *source_; }
  const SimplicialSet& target() const { return *target_; }

 private:
  const SimplicialSet* source_;
  const SimplicialSet* target_;
  std::vector<SimplexRef> images_;
};

}  // namespace looptor
