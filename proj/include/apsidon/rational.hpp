#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace apsidon {

// Exact rational scalar. Canonical form (lowest terms, denominator > 0) is
// re-established after every operation; nothing in the library ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpz_class num, mpz_class den = 1) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "p", "p/q", optional leading sign on p (and on q, tolerated).
  explicit Rational(std::string_view s) {
    auto p = try_parse(s);
    if (!p) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    v_ = std::move(p->v_);
  }

  static std::optional<Rational> try_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // mpz_set_str takes '-' but not '+', so shed an explicit plus here
    auto strip_plus = [](std::string_view t) { return t[0] == '+' ? t.substr(1) : t; };
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!looks_like_integer(num)) return std::nullopt;
    mpq_class q;
    if (slash == std::string_view::npos) {
      q = mpq_class(mpz_class(std::string(strip_plus(num))));
    } else {
      const std::string_view den = s.substr(slash + 1);
      if (!looks_like_integer(den)) return std::nullopt;
      mpz_class d{std::string(strip_plus(den))};
      if (d == 0) return std::nullopt;
      q = mpq_class(mpz_class(std::string(strip_plus(num))), d);
    }
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  // Canonical lowest-terms string: "5", "-3/4".
  std::string to_string() const { return v_.get_str(); }

  // Decimal rendering, digits fractional places, truncated toward zero.
  // Presentation only; results never feed back into exact computation.
  std::string decimal(int digits) const {
    if (digits < 0) throw std::invalid_argument("Rational: negative digit count");
    mpz_class n = ::abs(v_.get_num());
    const mpz_class& d = v_.get_den();
    mpz_class ip = n / d;
    mpz_class rem = n - ip * d;
    std::string out = sign() < 0 ? "-" : "";
    out += ip.get_str();
    if (digits == 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      mpz_class dig = rem / d;
      out += static_cast<char>('0' + dig.get_si());
      rem -= dig * d;
    }
    return out;
  }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    r.v_.canonicalize();
    return r;
  }
  static bool looks_like_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  mpq_class v_;
};

// floor(10^digits * r^(1/degree)) for r >= 0, degree 2 or 4, via integer
// square roots: floor(sqrt(floor(z))) == floor(sqrt(z)) for z >= 0, applied
// once or twice to floor(num * 10^(degree*digits) / den).
inline mpz_class root_floor_scaled(const Rational& r, unsigned degree, int digits) {
  if (r.sign() < 0) throw std::domain_error("root_floor_scaled: negative radicand");
  if (degree != 2 && degree != 4) throw std::invalid_argument("root_floor_scaled: degree must be 2 or 4");
  if (digits < 0) throw std::invalid_argument("root_floor_scaled: negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) * degree);
  mpz_class z = (r.num() * scale) / r.den();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
  if (degree == 4) mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
  return root;
}

// Decimal string of r^(1/degree) truncated to digits places.
inline std::string root_floor_decimal(const Rational& r, unsigned degree, int digits) {
  mpz_class scaled = root_floor_scaled(r, degree, digits);
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  const std::size_t dg = static_cast<std::size_t>(digits);
  if (s.size() <= dg) s.insert(0, dg + 1 - s.size(), '0');
  s.insert(s.size() - dg, ".");
  return s;
}

}  // namespace apsidon
