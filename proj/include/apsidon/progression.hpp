#pragma once

#include <stdexcept>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/mapping.hpp"
#include "apsidon/rational.hpp"

namespace apsidon {

// Arithmetic progression x + k*y for k = 1..n. Nonzero step makes the terms
// pairwise distinct without further checks.
class Progression {
 public:
  Progression(Rational x, Rational y, int n) : x_(std::move(x)), y_(std::move(y)), n_(n) {
    if (y_.is_zero()) throw std::invalid_argument("Progression: step must be nonzero");
    if (n_ < 1) throw std::invalid_argument("Progression: length must be positive");
  }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  int n() const { return n_; }

  Rational term(int k) const {
    if (k < 1 || k > n_) throw std::out_of_range("Progression: term index outside 1..n");
    return x_ + Rational(k) * y_;
  }

  std::vector<Rational> terms() const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int k = 1; k <= n_; ++k) out.push_back(term(k));
    return out;
  }

 private:
  Rational x_, y_;
  int n_;
};

// Image of the progression under f as a set; shrinks below n when f is not
// injective on the terms.
inline FiniteSet progression_image(const Mapping& f, const Progression& p) {
  std::vector<Rational> vals;
  vals.reserve(static_cast<std::size_t>(p.n()));
  for (int k = 1; k <= p.n(); ++k) vals.push_back(f.eval(p.term(k)));
  return FiniteSet(std::move(vals));
}

}  // namespace apsidon
