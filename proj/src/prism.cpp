#include "looptor/prism.hpp"

#include <algorithm>

#include "looptor/error.hpp"

namespace looptor {

SimplexRef PrismCalculus::source_of(const Prism& p) const {
  return p.exponent > 0 ? X_->face(p.simplex, p.position + 1) : X_->face(p.simplex, p.position);
}

SimplexRef PrismCalculus::target_of(const Prism& p) const {
  return p.exponent > 0 ? X_->face(p.simplex, p.position) : X_->face(p.simplex, p.position + 1);
}

bool PrismCalculus::is_identity_letter(const Prism& p) const { return p.simplex.has_degeneracy(p.position); }

PrismWord PrismCalculus::make(const SimplexRef& source, std::vector<Prism> letters) const {
  PrismWord w{source.dim, source, source, {}};
  SimplexRef at = source;
  for (Prism& p : letters) {
    if (p.simplex.dim != source.dim + 1 || p.position < 0 || p.position > source.dim)
      throw InputError("elementary prism does not fit dimension " + std::to_string(source.dim));
    if (source_of(p) != at)
      throw InputError("prisms do not chain: " + X_->to_string(at) + " vs " + X_->to_string(source_of(p)));
    at = target_of(p);
    if (is_identity_letter(p)) continue;
    if (!w.letters.empty()) {
      const Prism& b = w.letters.back();
      if (b.simplex == p.simplex && b.position == p.position && b.exponent == -p.exponent) {
        w.letters.pop_back();
        continue;
      }
    }
    w.letters.push_back(std::move(p));
  }
  w.target = at;
  return w;
}

PrismWord PrismCalculus::multiply(const PrismWord& a, const PrismWord& b) const {
  if (a.target != b.source)
    throw InputError("prism words do not compose: " + X_->to_string(a.target) + " vs " + X_->to_string(b.source));
  std::vector<Prism> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return make(a.source, std::move(ls));
}

PrismWord PrismCalculus::inverse(const PrismWord& w) const {
  std::vector<Prism> ls;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) ls.push_back({it->simplex, it->position, -it->exponent});
  return make(w.target, std::move(ls));
}

PrismWord PrismCalculus::face(const PrismWord& w, int j) const {
  if (w.dim < 1 || j < 0 || j > w.dim) throw InputError("prism face index out of range");
  std::vector<Prism> out;
  for (const Prism& p : w.letters) {
    if (j < p.position)
      out.push_back({X_->face(p.simplex, j), p.position - 1, p.exponent});
    else if (j > p.position)
      out.push_back({X_->face(p.simplex, j + 1), p.position, p.exponent});
  }
  return make(X_->face(w.source, j), std::move(out));
}

PrismWord PrismCalculus::degeneracy(const PrismWord& w, int j) const {
  if (j < 0 || j > w.dim) throw InputError("prism degeneracy index out of range");
  std::vector<Prism> out;
  for (const Prism& p : w.letters) {
    const SimplexRef& x = p.simplex;
    if (j < p.position) {
      out.push_back({X_->degeneracy(x, j), p.position + 1, p.exponent});
    } else if (j > p.position) {
      out.push_back({X_->degeneracy(x, j + 1), p.position, p.exponent});
    } else {
      Prism first{X_->degeneracy(x, j), j + 1, p.exponent};
      Prism second{X_->degeneracy(x, j + 1), j, p.exponent};
      if (p.exponent > 0) {
        out.push_back(first);
        out.push_back(second);
      } else {
        out.push_back(second);
        out.push_back(first);
      }
    }
  }
  return make(X_->degeneracy(w.source, j), std::move(out));
}

PrismWord PrismCalculus::iota(const SimplexRef& x) const {
  if (!X_->is_reduced()) throw InputError("the pseudosection needs a reduced simplicial set");
  int n = x.dim;
  std::vector<Prism> ls;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> f;
    for (int a = 0; a <= n - k; ++a) f.push_back(a);
    for (int a = 0; a <= k; ++a) f.push_back(n);
    ls.push_back({X_->apply_map(x, f), n - k, 1});
  }
  return make(x, std::move(ls));
}

PrismWord PrismCalculus::tau(const SimplexRef& x) const {
  int n = x.dim;
  if (n < 1) throw InputError("tau needs a simplex of positive dimension");
  PrismWord key = make(X_->face(x, n), {{x, n - 1, 1}});
  return multiply(multiply(inverse(iota(X_->face(x, n))), key), iota(X_->face(x, n - 1)));
}

PrismWord PrismCalculus::embed(const GroupWord& w) const {
  PrismWord r = identity(X_->base_simplex(w.dim));
  for (const Letter& l : w.letters) {
    PrismWord t = tau(l.simplex);
    r = multiply(r, l.exponent > 0 ? t : inverse(t));
  }
  return r;
}

namespace {

void record(std::vector<IdentityCheck>& out, const PrismCalculus& pc, std::string name, const PrismWord& lhs,
            const PrismWord& rhs) {
  IdentityCheck c{std::move(name), lhs == rhs, {}};
  if (!c.passed) c.detail = pc.to_string(lhs) + " != " + pc.to_string(rhs);
  out.push_back(std::move(c));
}

}  // namespace

std::vector<IdentityCheck> PrismCalculus::verify_pseudosection(const SimplexRef& x) const {
  std::vector<IdentityCheck> out;
  int n = x.dim;
  std::string at = " at " + X_->to_string(x);
  PrismWord ix = iota(x);
  for (int i = 0; i < n; ++i)
    record(out, *this, "d_" + std::to_string(i) + " iota = iota d_" + std::to_string(i) + at, face(ix, i),
           iota(X_->face(x, i)));
  if (n >= 1)
    record(out, *this, "d_n iota = (iota d_n)(tau)" + at, face(ix, n), multiply(iota(X_->face(x, n)), tau(x)));
  for (int i = 0; i <= n; ++i)
    record(out, *this, "s_" + std::to_string(i) + " iota = iota s_" + std::to_string(i) + at, degeneracy(ix, i),
           iota(X_->degeneracy(x, i)));
  if (n < 1) return out;
  PrismWord tx = tau(x);
  for (int i = 0; i + 1 < n; ++i)
    record(out, *this, "d_" + std::to_string(i) + " tau = tau d_" + std::to_string(i) + at, face(tx, i),
           tau(X_->face(x, i)));
  if (n >= 2)
    record(out, *this, "d_{n-1} tau = (tau d_n)^-1 (tau d_{n-1})" + at, face(tx, n - 1),
           multiply(inverse(tau(X_->face(x, n))), tau(X_->face(x, n - 1))));
  for (int i = 0; i < n; ++i)
    record(out, *this, "s_" + std::to_string(i) + " tau = tau s_" + std::to_string(i) + at, degeneracy(tx, i),
           tau(X_->degeneracy(x, i)));
  if (x.has_degeneracy(n - 1))
    record(out, *this, "tau s_n = 1" + at, tx, identity(X_->base_simplex(n - 1)));
  return out;
}

std::string PrismCalculus::to_string(const PrismWord& w) const {
  std::string s = "[" + X_->to_string(w.source) + " -> " + X_->to_string(w.target) + "]";
  if (w.letters.empty()) return s + " id";
  for (const Prism& p : w.letters) {
    s += " (" + X_->to_string(p.simplex) + "," + std::to_string(p.position) + ")";
    if (p.exponent < 0) s += "^-1";
  }
  return s;
}

}  // namespace looptor
