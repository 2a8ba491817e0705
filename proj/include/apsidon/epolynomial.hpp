#pragma once

#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "apsidon/finite_set.hpp"
#include "apsidon/rational.hpp"

namespace apsidon {

// Gaussian rational a + bi; exact complex scalar for trigonometric sums.
struct GaussianRational {
  Rational re, im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

// Finite exponential sum sum_l c(l) e^{i l t} keyed by real rational
// frequency. Zero coefficients are never stored.
class EPolynomial {
 public:
  EPolynomial() = default;

  void set_coeff(const Rational& freq, GaussianRational c) {
    if (c.is_zero())
      terms_.erase(freq);
    else
      terms_[freq] = std::move(c);
  }

  GaussianRational coeff(const Rational& freq) const {
    auto it = terms_.find(freq);
    return it == terms_.end() ? GaussianRational{} : it->second;
  }

  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  FiniteSet support() const {
    std::vector<Rational> freqs;
    freqs.reserve(terms_.size());
    for (const auto& [f, c] : terms_) freqs.push_back(f);
    return FiniteSet(std::move(freqs));
  }

  static EPolynomial unit_coefficients(const FiniteSet& freqs) {
    EPolynomial p;
    for (const Rational& f : freqs) p.set_coeff(f, {Rational(1), Rational(0)});
    return p;
  }

 private:
  std::map<Rational, GaussianRational> terms_;
};

// Mean square of |f|: sum of |c(l)|^2.
inline Rational b2_norm_squared(const EPolynomial& f) {
  Rational out(0);
  for (const auto& [freq, c] : f) out += c.norm_sq();
  return out;
}

// Mean fourth power of |f|: sum over all frequency quadruples with
// l1+l2 = l3+l4 of c(l1)c(l2) conj(c(l3)c(l4)). Grouping by the common sum s
// turns that into sum_s T(s) conj(T(s)) with T(s) = sum_{l1+l2=s} c(l1)c(l2),
// so the imaginary part vanishes identically; the assert pins that down.
// When the support is Sidon this equals 2*b2^2 - sum |c|^4.
inline Rational b4_norm_fourth(const EPolynomial& f) {
  std::map<Rational, GaussianRational> by_sum;
  for (const auto& [f1, c1] : f)
    for (const auto& [f2, c2] : f) {
      auto [it, inserted] = by_sum.try_emplace(f1 + f2, c1 * c2);
      if (!inserted) it->second = it->second + c1 * c2;
    }
  GaussianRational total{};
  for (const auto& [sum, t] : by_sum) total = total + t * t.conj();
  assert(total.im.is_zero());
  if (!total.im.is_zero()) throw std::logic_error("b4_norm_fourth: nonreal total");
  return total.re;
}

// Additive energy of {1..N} in closed form; the fourth power of the B^4 norm
// of the length-N Dirichlet kernel. Validated against brute force in tests.
inline mpz_class dirichlet_kernel_energy(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("dirichlet_kernel_energy: N must be >= 1");
  return (2 * n * n * n + n) / 3;
}

}  // namespace apsidon
