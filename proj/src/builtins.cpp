#include "looptor/builtins.hpp"

#include <algorithm>

#include "looptor/error.hpp"

namespace looptor {

namespace {

std::vector<int> down_to_zero(int top) {
  std::vector<int> w;
  for (int j = top; j >= 0; --j) w.push_back(j);
  return w;
}

std::string subset_name(const std::vector<int>& s) {
  std::string name = "[";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) name += ',';
    name += std::to_string(s[k]);
  }
  return name + "]";
}

// Nonempty subsets of {0..n}, ordered by size then lexicographically.
std::vector<std::vector<int>> subsets(int n, int min_size) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int k = 0; k <= n; ++k)
      if (mask & (1u << k)) s.push_back(k);
    if (static_cast<int>(s.size()) >= min_size) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Quotients of the standard simplex: subsets smaller than `keep_from` collapse to the vertex "v".
SimplicialSet simplex_quotient(int n, int keep_from) {
  if (n < 0 || n > 12) throw InputError("simplex dimension out of range: " + std::to_string(n));
  SimplicialSetDesc d;
  if (keep_from > 1) d.generators.emplace_back("v", 0);
  for (const auto& s : subsets(n, keep_from)) {
    int dim = static_cast<int>(s.size()) - 1;
    d.generators.emplace_back(subset_name(s), dim);
    if (dim == 0) continue;
    auto& faces = d.faces[subset_name(s)];
    for (int i = 0; i <= dim; ++i) {
      std::vector<int> f = s;
      f.erase(f.begin() + i);
      if (static_cast<int>(f.size()) >= keep_from)
        faces.push_back({{}, subset_name(f)});
      else
        faces.push_back({down_to_zero(dim - 2), "v"});
    }
  }
  d.basepoint = keep_from > 1 ? "v" : "[0]";
  return SimplicialSet::load(d);
}

}  // namespace

SimplicialSet sphere(int n) {
  if (n < 1) throw InputError("sphere dimension must be at least 1");
  SimplicialSetDesc d;
  d.generators = {{"v", 0}, {"x", n}};
  d.faces["x"] = std::vector<FaceEntry>(n + 1, FaceEntry{down_to_zero(n - 2), "v"});
  d.basepoint = "v";
  return SimplicialSet::load(d);
}

SimplicialSet circle() {
  SimplicialSetDesc d;
  d.generators = {{"v", 0}, {"e", 1}};
  d.faces["e"] = {{{}, "v"}, {{}, "v"}};
  d.basepoint = "v";
  return SimplicialSet::load(d);
}

SimplicialSet point() {
  SimplicialSetDesc d;
  d.generators = {{"v", 0}};
  d.basepoint = "v";
  return SimplicialSet::load(d);
}

SimplicialSet wedge_of_spheres(const std::vector<int>& dims) {
  SimplicialSetDesc d;
  d.generators.emplace_back("v", 0);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int n = dims[k];
    if (n < 1) throw InputError("sphere dimension must be at least 1");
    std::string name = "x" + std::to_string(k + 1);
    d.generators.emplace_back(name, n);
    d.faces[name] = std::vector<FaceEntry>(n + 1, FaceEntry{down_to_zero(n - 2), "v"});
  }
  d.basepoint = "v";
  return SimplicialSet::load(d);
}

SimplicialSet reduced_simplex(int n) { return simplex_quotient(n, 2); }

SimplicialSet collapsed_simplex(int n) { return simplex_quotient(n, 3); }

SimplicialSet standard_simplex(int n) { return simplex_quotient(n, 1); }

StandardSimplex::StandardSimplex(int n) : n_(n), space_(standard_simplex(n)) {
  by_mask_.assign(1u << (n + 1), -1);
  gen_vertices_.resize(space_.num_generators());
  for (GenId g = 0; g < space_.num_generators(); ++g) {
    const std::string& name = space_.name(g);
    std::vector<int> vs;
    int cur = 0;
    for (char c : name.substr(1)) {
      if (c == ',' || c == ']') {
        vs.push_back(cur);
        cur = 0;
      } else {
        cur = cur * 10 + (c - '0');
      }
    }
    unsigned mask = 0;
    for (int v : vs) mask |= 1u << v;
    by_mask_[mask] = g;
    gen_vertices_[g] = vs;
  }
}

SimplexRef StandardSimplex::simplex(const std::vector<int>& vertices) const {
  if (vertices.empty()) throw InputError("empty vertex sequence");
  unsigned mask = 0;
  std::vector<int> h;
  int rank = -1;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    int v = vertices[k];
    if (v < 0 || v > n_) throw InputError("vertex out of range in standard simplex");
    if (k > 0 && v < vertices[k - 1]) throw InputError("vertex sequence is not weakly increasing");
    if (k == 0 || v != vertices[k - 1]) ++rank;
    h.push_back(rank);
    mask |= 1u << v;
  }
  return {by_mask_[mask], degeneracies_of_surjection(h), static_cast<int>(vertices.size()) - 1};
}

std::vector<int> StandardSimplex::vertices(const SimplexRef& s) const {
  std::vector<int> eta = surjection_of_degeneracies(s.degeneracies, s.dim);
  const auto& vs = gen_vertices_.at(s.gen);
  std::vector<int> out;
  out.reserve(eta.size());
  for (int e : eta) out.push_back(vs[e]);
  return out;
}

SimplicialMap characteristic_map(const StandardSimplex& delta, const SimplicialSet& X, const SimplexRef& x) {
  if (x.dim != delta.n()) throw InputError("characteristic map needs a simplex of dimension " + std::to_string(delta.n()));
  std::vector<SimplexRef> images;
  for (GenId g = 0; g < delta.space().num_generators(); ++g)
    images.push_back(X.apply_map(x, delta.vertices(delta.space().generator(g))));
  return SimplicialMap(delta.space(), X, std::move(images));
}

}  // namespace looptor
