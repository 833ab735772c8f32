#include "looptor/simplicial.hpp"

#include <algorithm>
#include <sstream>

#include "looptor/error.hpp"

namespace looptor {

bool SimplexRef::has_degeneracy(int i) const {
  return std::find(degeneracies.begin(), degeneracies.end(), i) != degeneracies.end();
}

IncreasingMap IncreasingMap::identity(int n) {
  IncreasingMap f{{}, n};
  for (int k = 0; k <= n; ++k) f.values.push_back(k);
  return f;
}

IncreasingMap IncreasingMap::coface(int n, int i) {
  IncreasingMap f{{}, n};
  for (int k = 0; k <= n; ++k)
    if (k != i) f.values.push_back(k);
  return f;
}

IncreasingMap IncreasingMap::codegeneracy(int n, int i) {
  IncreasingMap f{{}, n};
  for (int k = 0; k <= n; ++k) {
    f.values.push_back(k);
    if (k == i) f.values.push_back(k);
  }
  return f;
}

IncreasingMap IncreasingMap::compose(const IncreasingMap& inner) const {
  if (inner.target != source_arity())
    throw InputError("increasing maps are not composable: target " + std::to_string(inner.target) +
                     " vs source arity " + std::to_string(source_arity()));
  IncreasingMap r{{}, target};
  r.values.reserve(inner.values.size());
  for (int v : inner.values) r.values.push_back(values[v]);
  return r;
}

void IncreasingMap::validate() const {
  if (values.empty()) throw InputError("increasing map with no values");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 0 || values[k] > target)
      throw InputError("increasing map value out of range [0, " + std::to_string(target) + "]");
    if (k > 0 && values[k] < values[k - 1]) throw InputError("map values are not weakly increasing");
  }
}

std::vector<int> degeneracies_of_surjection(std::span<const int> eta) {
  std::vector<int> word;
  for (int i = static_cast<int>(eta.size()) - 2; i >= 0; --i)
    if (eta[i] == eta[i + 1]) word.push_back(i);
  return word;
}

std::vector<int> surjection_of_degeneracies(std::span<const int> degeneracies, int dim) {
  std::vector<int> eta(dim + 1);
  for (int i = 0; i <= dim; ++i) {
    int below = 0;
    for (int j : degeneracies)
      if (j < i) ++below;
    eta[i] = i - below;
  }
  return eta;
}

namespace {

void check_normal_form(const std::vector<int>& word, int gen_dim, int dim) {
  if (static_cast<int>(word.size()) + gen_dim != dim)
    throw InputError("degeneracy word length does not match dimension");
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && word[k] >= word[k - 1]) throw InputError("degeneracy word is not strictly decreasing");
    // s_{j} is applied at dimension dim - 1 - k, so j <= dim - 1 - k.
    if (word[k] < 0 || word[k] > dim - 1 - static_cast<int>(k))
      throw InputError("degeneracy index out of range");
  }
}

}  // namespace

SimplicialSet SimplicialSet::load(const SimplicialSetDesc& desc) {
  SimplicialSet X;
  for (const auto& [name, dim] : desc.generators) {
    if (dim < 0) throw InputError("generator '" + name + "' has negative dimension");
    if (X.index_.count(name)) throw InputError("duplicate generator '" + name + "'");
    GenId id = X.num_generators();
    X.index_.emplace(name, id);
    X.names_.push_back(name);
    X.dims_.push_back(dim);
    if (static_cast<int>(X.by_dim_.size()) <= dim) X.by_dim_.resize(dim + 1);
    X.by_dim_[dim].push_back(id);
  }
  if (X.names_.empty()) throw InputError("simplicial set has no generators");
  if (X.by_dim_.empty() || X.by_dim_[0].empty()) throw InputError("simplicial set has no vertices");

  for (const auto& [name, entries] : desc.faces)
    if (!X.index_.count(name)) throw InputError("face table lists unknown generator '" + name + "'");

  X.faces_.resize(X.names_.size());
  for (GenId g = 0; g < X.num_generators(); ++g) {
    int n = X.dims_[g];
    auto it = desc.faces.find(X.names_[g]);
    if (n == 0) {
      if (it != desc.faces.end() && !it->second.empty())
        throw InputError("vertex '" + X.names_[g] + "' must not have faces");
      continue;
    }
    if (it == desc.faces.end()) throw InputError("missing faces for generator '" + X.names_[g] + "'");
    if (static_cast<int>(it->second.size()) != n + 1)
      throw InputError("generator '" + X.names_[g] + "' of dimension " + std::to_string(n) + " needs " +
                       std::to_string(n + 1) + " faces, got " + std::to_string(it->second.size()));
    for (const FaceEntry& e : it->second) {
      auto target = X.index_.find(e.generator);
      if (target == X.index_.end())
        throw InputError("face of '" + X.names_[g] + "' refers to unknown generator '" + e.generator + "'");
      GenId t = target->second;
      try {
        check_normal_form(e.degeneracies, X.dims_[t], n - 1);
      } catch (const InputError& err) {
        throw InputError("bad face of '" + X.names_[g] + "': " + err.what());
      }
      X.faces_[g].push_back({t, e.degeneracies, n - 1});
    }
  }

  if (desc.basepoint.empty()) {
    X.basepoint_ = X.by_dim_[0].front();
  } else {
    auto bp = X.index_.find(desc.basepoint);
    if (bp == X.index_.end()) throw InputError("unknown basepoint '" + desc.basepoint + "'");
    if (X.dims_[bp->second] != 0) throw InputError("basepoint must be a vertex");
    X.basepoint_ = bp->second;
  }

  for (GenId g = 0; g < X.num_generators(); ++g) X.check_identities(g);
  return X;
}

void SimplicialSet::check_identities(GenId g) const {
  int n = dims_[g];
  if (n < 2) return;
  SimplexRef x = generator(g);
  for (int j = 1; j <= n; ++j)
    for (int i = 0; i < j; ++i) {
      SimplexRef lhs = face(face(x, j), i);
      SimplexRef rhs = face(face(x, i), j - 1);
      if (lhs != rhs) throw SimplicialIdentityError(names_[g], i, j, to_string(lhs) + " != " + to_string(rhs));
    }
}

std::optional<GenId> SimplicialSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const GenId> SimplicialSet::generators(int dim) const {
  if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return {};
  return by_dim_[dim];
}

std::vector<int> SimplicialSet::counts() const {
  std::vector<int> c;
  for (const auto& gens : by_dim_) c.push_back(static_cast<int>(gens.size()));
  return c;
}

SimplexRef SimplicialSet::base_simplex(int n) const {
  SimplexRef v{basepoint_, {}, n};
  for (int j = n - 1; j >= 0; --j) v.degeneracies.push_back(j);
  return v;
}

SimplexRef SimplicialSet::pull_generator(GenId y, std::vector<int> h) const {
  int m = dims_[y];
  std::vector<bool> hit(m + 1, false);
  for (int v : h) hit[v] = true;
  auto missing = std::find(hit.begin(), hit.end(), false);
  if (missing == hit.end()) {
    // h is already a surjection onto [m].
    SimplexRef r{y, degeneracies_of_surjection(h), static_cast<int>(h.size()) - 1};
    return r;
  }
  int i = static_cast<int>(missing - hit.begin());
  for (int& v : h)
    if (v > i) --v;
  const SimplexRef& f = faces_[y][i];
  return apply_map(f, h);
}

SimplexRef SimplicialSet::apply_map(const SimplexRef& x, std::span<const int> values) const {
  std::vector<int> sigma = surjection_of_degeneracies(x.degeneracies, x.dim);
  std::vector<int> h;
  h.reserve(values.size());
  for (int v : values) {
    if (v < 0 || v > x.dim) throw InputError("map value outside the simplex");
    h.push_back(sigma[v]);
  }
  for (std::size_t k = 1; k < h.size(); ++k)
    if (h[k] < h[k - 1]) throw InputError("map values are not weakly increasing");
  return pull_generator(x.gen, std::move(h));
}

SimplexRef SimplicialSet::apply_map(const SimplexRef& x, const IncreasingMap& f) const {
  if (f.target != x.dim)
    throw InputError("arity mismatch: map targets [" + std::to_string(f.target) + "] but simplex has dimension " +
                     std::to_string(x.dim));
  f.validate();
  return apply_map(x, std::span<const int>(f.values));
}

SimplexRef SimplicialSet::face(const SimplexRef& x, int i) const {
  if (x.dim < 1 || i < 0 || i > x.dim)
    throw InputError("face index " + std::to_string(i) + " out of range for dimension " + std::to_string(x.dim));
  return apply_map(x, IncreasingMap::coface(x.dim, i).values);
}

SimplexRef SimplicialSet::degeneracy(const SimplexRef& x, int i) const {
  if (i < 0 || i > x.dim)
    throw InputError("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                     std::to_string(x.dim));
  // s_i s_j = s_{j+1} s_i for i <= j: indices >= i shift up, then i is inserted.
  SimplexRef r{x.gen, {}, x.dim + 1};
  for (int j : x.degeneracies) r.degeneracies.push_back(j >= i ? j + 1 : j);
  r.degeneracies.push_back(i);
  std::sort(r.degeneracies.rbegin(), r.degeneracies.rend());
  return r;
}

std::vector<SimplexRef> SimplicialSet::simplices(int n) const {
  std::vector<SimplexRef> out;
  for (int m = 0; m <= std::min(n, max_dim()); ++m) {
    int k = n - m;
    // choose k positions in [0, n-1]
    std::vector<int> pick(k);
    for (int a = 0; a < k; ++a) pick[a] = a;
    while (true) {
      std::vector<int> word(pick.rbegin(), pick.rend());
      for (GenId g : by_dim_[m]) out.push_back({g, word, n});
      int a = k - 1;
      while (a >= 0 && pick[a] == n - k + a) --a;
      if (a < 0) break;
      ++pick[a];
      for (int b = a + 1; b < k; ++b) pick[b] = pick[b - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplexRef> SimplicialSet::nondegenerate(int n) const {
  std::vector<SimplexRef> out;
  for (GenId g : generators(n)) out.push_back(generator(g));
  return out;
}

std::string SimplicialSet::to_string(const SimplexRef& x) const {
  std::ostringstream os;
  for (int j : x.degeneracies) os << 's' << j << ' ';
  os << (x.gen >= 0 && x.gen < num_generators() ? names_[x.gen] : std::string("?"));
  return os.str();
}

SimplicialSetDesc SimplicialSet::describe() const {
  SimplicialSetDesc d;
  for (GenId g = 0; g < num_generators(); ++g) {
    d.generators.emplace_back(names_[g], dims_[g]);
    if (dims_[g] == 0) continue;
    auto& entries = d.faces[names_[g]];
    for (const SimplexRef& f : faces_[g]) entries.push_back({f.degeneracies, names_[f.gen]});
  }
  d.basepoint = names_[basepoint_];
  return d;
}

SimplicialMap::SimplicialMap(const SimplicialSet& source, const SimplicialSet& target,
                             std::vector<SimplexRef> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source.num_generators())
    throw InputError("simplicial map needs one image per generator");
  for (GenId g = 0; g < source.num_generators(); ++g)
    if (images_[g].dim != source.generator_dim(g))
      throw InputError("image of '" + source.name(g) + "' has the wrong dimension");
  for (GenId g = 0; g < source.num_generators(); ++g) {
    SimplexRef x = source.generator(g);
    for (int i = 0; x.dim > 0 && i <= x.dim; ++i)
      if ((*this)(source.face(x, i)) != target.face(images_[g], i))
        throw InputError("map does not commute with d_" + std::to_string(i) + " on '" + source.name(g) + "'");
  }
}

SimplexRef SimplicialMap::operator()(const SimplexRef& x) const {
  std::vector<int> sigma = surjection_of_degeneracies(x.degeneracies, x.dim);
  return target_->apply_map(images_.at(x.gen), std::span<const int>(sigma));
}

}  // namespace looptor
