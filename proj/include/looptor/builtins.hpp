#pragma once

#include <vector>

#include "looptor/simplicial.hpp"

namespace looptor {

/// Minimal model: one vertex "v" and one nondegenerate n-simplex "x" (n >= 1).
SimplicialSet sphere(int n);
/// One vertex "v", one edge "e".
SimplicialSet circle();
SimplicialSet point();
/// Spheres of the given dimensions glued at the base point; cells are named x1, x2, ...
SimplicialSet wedge_of_spheres(const std::vector<int>& dims);
/// The standard n-simplex with its vertices identified to one point.
SimplicialSet reduced_simplex(int n);
/// The standard n-simplex with its whole 1-skeleton collapsed to a point.
SimplicialSet collapsed_simplex(int n);
/// The standard (non-reduced) n-simplex; simplices correspond to increasing maps into [n].
SimplicialSet standard_simplex(int n);

/// Vertex-sequence view of the standard simplex: SimplexRef <-> increasing map into [n].
class StandardSimplex {
 public:
  explicit StandardSimplex(int n);

  int n() const { return n_; }
  const SimplicialSet& space() const { return space_; }
  /// The simplex [f_0, ..., f_m].
  SimplexRef simplex(const std::vector<int>& vertices) const;
  std::vector<int> vertices(const SimplexRef& s) const;

 private:
  int n_;
  SimplicialSet space_;
  std::vector<GenId> by_mask_;
  std::vector<std::vector<int>> gen_vertices_;
};

/// The characteristic map Delta^n -> X of an n-simplex x.
SimplicialMap characteristic_map(const StandardSimplex& delta, const SimplicialSet& X, const SimplexRef& x);

}  // namespace looptor
