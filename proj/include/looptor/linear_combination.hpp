#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace looptor {

using Coefficient = std::int64_t;

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

/// Finitely supported integer combination of basis keys. Zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Coefficient>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, Coefficient c = 1) { add(key, c); }

  void add(const Key& key, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination& other, Coefficient scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, checked_mul(c, scale));
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, -1);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(Coefficient s, const LinearCombination& a) {
    LinearCombination r;
    r.add(a, s);
    return r;
  }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Keeps the terms whose key satisfies `keep`.
  LinearCombination filtered(const std::function<bool(const Key&)>& keep) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_)
      if (keep(k)) r.terms_.emplace(k, c);
    return r;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  bool operator==(const LinearCombination&) const = default;

 private:
  Map terms_;
};

}  // namespace looptor
