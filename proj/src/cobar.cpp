#include "looptor/cobar.hpp"

#include <functional>

#include "looptor/error.hpp"

namespace looptor {

Cobar::Cobar(const SimplicialSet& X) : X_(&X) {
  for (GenId g = 0; g < X.num_generators(); ++g)
    if (X.generator_dim(g) >= 1) gens_.push_back(g);
}

int Cobar::degree(const CobarMonomial& m) const {
  int d = 0;
  for (GenId g : m) d += X_->generator_dim(g) - 1;
  return d;
}

std::vector<CobarMonomial> Cobar::basis(int k, std::optional<int> max_length) const {
  if (has_degree_zero_generators() && !max_length)
    throw InfiniteBasisError("cobar degree " + std::to_string(k) +
                             " has infinitely many monomials: the space has nondegenerate edges");
  std::vector<CobarMonomial> out;
  CobarMonomial cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) out.push_back(cur);
    if (max_length && static_cast<int>(cur.size()) >= *max_length) return;
    for (GenId g : gens_) {
      int d = X_->generator_dim(g) - 1;
      if (d > remaining) continue;
      cur.push_back(g);
      rec(remaining - d);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(k);
  return out;
}

CobarChain Cobar::bracket(const SimplexRef& y) const {
  if (!y.is_degenerate()) return CobarChain(CobarMonomial{y.gen});
  if (y.dim == 1) return CobarChain(CobarMonomial{});
  return {};
}

CobarChain Cobar::multiply(const CobarChain& a, const CobarChain& b) const {
  CobarChain out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      CobarMonomial m = u;
      m.insert(m.end(), v.begin(), v.end());
      out.add(m, checked_mul(cu, cv));
    }
  return out;
}

CobarChain Cobar::generator_diff(GenId g) const {
  SimplexRef x = X_->generator(g);
  int n = x.dim - 1;
  CobarChain out;
  for (int i = 1; i <= n; ++i) {
    std::vector<int> front, back;
    for (int a = 0; a <= i; ++a) front.push_back(a);
    for (int a = i; a <= n + 1; ++a) back.push_back(a);
    CobarChain term = multiply(bracket(X_->apply_map(x, front)), bracket(X_->apply_map(x, back)));
    term -= bracket(X_->face(x, i));
    out.add(term, i % 2 ? -1 : 1);
  }
  return out;
}

CobarChain Cobar::diff(const CobarMonomial& m) const {
  CobarChain out;
  int sign = 1;
  for (std::size_t k = 0; k < m.size(); ++k) {
    CobarMonomial left(m.begin(), m.begin() + k), right(m.begin() + k + 1, m.end());
    out.add(multiply(multiply(CobarChain(left), generator_diff(m[k])), CobarChain(right)), sign);
    if ((X_->generator_dim(m[k]) - 1) % 2) sign = -sign;
  }
  return out;
}

CobarChain Cobar::diff(const CobarChain& c) const {
  CobarChain out;
  for (const auto& [m, k] : c) out.add(diff(m), k);
  return out;
}

ChainComplex Cobar::complex(int top) const {
  std::vector<std::vector<CobarMonomial>> bases(top + 1);
  parallel_for(top + 1, [&](int k) { bases[k] = basis(k); });
  std::function<CobarChain(const CobarMonomial&)> d = [this](const CobarMonomial& m) { return diff(m); };
  return make_complex(bases, d);
}

std::vector<HomologyGroup> Cobar::homology(int max_degree) const {
  ChainComplex C = complex(max_degree + 1);
  C.check();
  return homology_table(C, max_degree);
}

std::string Cobar::to_string(const CobarMonomial& m) const {
  if (m.empty()) return "1";
  std::string s;
  for (GenId g : m) s += (s.empty() ? "c" : " c") + X_->name(g);
  return s;
}

}  // namespace looptor
