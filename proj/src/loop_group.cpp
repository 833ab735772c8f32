#include "looptor/loop_group.hpp"

#include <algorithm>

#include "looptor/error.hpp"

namespace looptor {

std::string to_string(Convention c) {
  switch (c) {
    case Convention::A1B1: return "A1B1";
    case Convention::A1B2: return "A1B2";
    case Convention::A2B1: return "A2B1";
    case Convention::A2B2: return "A2B2";
  }
  return "?";
}

Convention parse_convention(std::string_view s) {
  for (Convention c : kAllConventions)
    if (to_string(c) == s) return c;
  throw InputError("unknown convention '" + std::string(s) + "'");
}

namespace {

bool is_a2(Convention c) { return c == Convention::A2B1 || c == Convention::A2B2; }
bool is_b1(Convention c) { return c == Convention::A1B1 || c == Convention::A2B1; }

}  // namespace

bool LoopGroup::excluded(const SimplexRef& y) const {
  return is_a2(conv_) ? y.has_degeneracy(y.dim - 1) : y.has_degeneracy(0);
}

GroupWord LoopGroup::tau(const SimplexRef& x) const {
  if (x.dim < 1) throw InputError("tau needs a simplex of positive dimension");
  GroupWord w{x.dim - 1, {}};
  if (!excluded(x)) w.letters.push_back({x, 1});
  return w;
}

GroupWord LoopGroup::tau_inverse(const SimplexRef& x) const {
  GroupWord w = tau(x);
  for (Letter& l : w.letters) l.exponent = -1;
  return w;
}

GroupWord LoopGroup::reduce(int dim, std::vector<Letter> letters) const {
  GroupWord w{dim, {}};
  w.letters.reserve(letters.size());
  for (Letter& l : letters) {
    if (l.simplex.dim != dim + 1)
      throw InputError("letter of dimension " + std::to_string(l.simplex.dim) + " in a word of G_" +
                       std::to_string(dim));
    if (excluded(l.simplex)) continue;
    if (!w.letters.empty() && w.letters.back().simplex == l.simplex &&
        w.letters.back().exponent == -l.exponent) {
      w.letters.pop_back();
      continue;
    }
    w.letters.push_back(std::move(l));
  }
  return w;
}

GroupWord LoopGroup::multiply(const GroupWord& a, const GroupWord& b) const {
  if (a.dim != b.dim) throw InputError("cannot multiply words of different dimensions");
  std::vector<Letter> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return reduce(a.dim, std::move(ls));
}

GroupWord LoopGroup::inverse(const GroupWord& w) const {
  GroupWord r{w.dim, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back({it->simplex, -it->exponent});
  return r;
}

// d_i of the letter tau(y), y in X_{n+1}, as an unreduced letter sequence in G_{n-1}.
std::vector<Letter> LoopGroup::letter_face(const SimplexRef& y, int n, int i) const {
  const SimplicialSet& X = *X_;
  if (is_a2(conv_)) {
    if (i < n) return {{X.face(y, i), 1}};
    SimplexRef top = X.face(y, n + 1), next = X.face(y, n);
    if (is_b1(conv_)) return {{top, -1}, {next, 1}};
    return {{next, 1}, {top, -1}};
  }
  if (i > 0) return {{X.face(y, i + 1), 1}};
  SimplexRef f0 = X.face(y, 0), f1 = X.face(y, 1);
  if (is_b1(conv_)) return {{f1, 1}, {f0, -1}};
  return {{f0, -1}, {f1, 1}};
}

GroupWord LoopGroup::face(const GroupWord& w, int i) const {
  if (w.dim < 1 || i < 0 || i > w.dim)
    throw InputError("face index " + std::to_string(i) + " out of range for G_" + std::to_string(w.dim));
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    std::vector<Letter> img = letter_face(l.simplex, w.dim, i);
    if (l.exponent < 0) {
      std::reverse(img.begin(), img.end());
      for (Letter& m : img) m.exponent = -m.exponent;
    }
    out.insert(out.end(), img.begin(), img.end());
  }
  return reduce(w.dim - 1, std::move(out));
}

GroupWord LoopGroup::degeneracy(const GroupWord& w, int i) const {
  if (i < 0 || i > w.dim)
    throw InputError("degeneracy index " + std::to_string(i) + " out of range for G_" + std::to_string(w.dim));
  int shift = is_a2(conv_) ? 0 : 1;
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) out.push_back({X_->degeneracy(l.simplex, i + shift), l.exponent});
  return reduce(w.dim + 1, std::move(out));
}

std::optional<int> LoopGroup::degenerate_index(const GroupWord& w) const {
  for (int i = 0; i < w.dim; ++i)
    if (degeneracy(face(w, i), i) == w) return i;
  return std::nullopt;
}

std::string LoopGroup::to_string(const GroupWord& w) const {
  if (w.letters.empty()) return "1_" + std::to_string(w.dim);
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += "tau(" + X_->to_string(l.simplex) + ")";
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

GroupWord push_word(const SimplicialMap& f, const LoopGroup& target, const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) out.push_back({f(l.simplex), l.exponent});
  return target.reduce(w.dim, std::move(out));
}

}  // namespace looptor
