#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "apsidon/rational.hpp"

namespace apsidon {

// Finite set of exact rationals, stored strictly increasing.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::vector<Rational> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Rational& operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Rational>& elements() const { return elems_; }

  bool contains(const Rational& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  bool subset_of(const FiniteSet& other) const {
    return std::all_of(elems_.begin(), elems_.end(),
                       [&](const Rational& x) { return other.contains(x); });
  }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Rational> elems_;
};

inline FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Rational> v;
  v.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return FiniteSet(std::move(v));
}

// {a + sign*b : a in A, b in B}; sign must be +1 or -1.
inline FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sumset: sign must be +1 or -1");
  std::set<Rational> out;
  for (const Rational& x : a)
    for (const Rational& y : b) out.insert(sign == 1 ? x + y : x - y);
  return FiniteSet(std::vector<Rational>(out.begin(), out.end()));
}

// {0} u M u (M+M) u (M-M) u (M+M-M): every value a new image point must
// avoid (through the constraint vectors) so that extending a Sidon set by
// the image stays Sidon.
inline FiniteSet forbidden_closure(const FiniteSet& m) {
  std::set<Rational> out;
  out.insert(Rational(0));
  for (const Rational& x : m) out.insert(x);
  std::vector<Rational> plus;
  plus.reserve(m.size() * m.size());
  for (const Rational& x : m)
    for (const Rational& y : m) {
      plus.push_back(x + y);
      out.insert(x + y);
      out.insert(x - y);
    }
  for (const Rational& s : plus)
    for (const Rational& z : m) out.insert(s - z);
  return FiniteSet(std::vector<Rational>(out.begin(), out.end()));
}

}  // namespace apsidon
