#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "apsidon/rational.hpp"

namespace apsidon {

/*
 * Exact Cantor staircase value for rational t in [0, 1].
 *
 * Write t = 0.d1 d2 d3 ... in base 3. Reading digits until the first 1, each
 * digit 0/2 becomes binary digit 0/1; a first digit 1 at position i
 * terminates the expansion with value prefix + 2^-i. A rational with no
 * digit 1 has an eventually periodic {0,2}-expansion, assembled exactly:
 *
 *   preperiod a = multiplicity of 3 in den(t); the remainder sequence of the
 *   base-3 long division is purely periodic from step a on, so the cycle is
 *   detected by comparing against the single remainder r_a (O(1) state).
 *   With P = the first a bits and C = the L cycle bits as integers,
 *
 *     value = (P*(2^L - 1) + C) / (2^a * (2^L - 1)).
 *
 * Bits are packed MSB-first into 64-bit words, so the evaluation costs
 * O(a + L) word operations. Denominators that fit comfortably in 64 bits
 * run the long division on native integers.
 */
inline Rational cantor_value(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) throw std::domain_error("cantor_value: t outside [0, 1]");
  if (t == Rational(1)) return Rational(1);

  const mpz_class q = t.den();
  mpz_class r = t.num();

  // preperiod length: multiplicity of 3 in q
  unsigned long preperiod = 0;
  {
    mpz_class qq = q, quot, rem;
    while (true) {
      mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), qq.get_mpz_t(), 3);
      if (rem != 0) break;
      qq = quot;
      ++preperiod;
    }
  }

  std::vector<std::uint64_t> words;
  std::uint64_t buf = 0;
  int buf_bits = 0;
  unsigned long emitted = 0;
  auto push_bit = [&](int b) {
    buf = (buf << 1) | static_cast<std::uint64_t>(b);
    if (++buf_bits == 64) {
      words.push_back(buf);
      buf = 0;
      buf_bits = 0;
    }
    ++emitted;
  };

  const bool small = q.fits_slong_p() && q.get_si() <= INT64_MAX / 4;
  const std::int64_t qs = small ? static_cast<std::int64_t>(q.get_si()) : 0;
  std::int64_t rs = small ? static_cast<std::int64_t>(r.get_si()) : 0;

  // anchor = remainder after `preperiod` digits; cycle closes on its return
  mpz_class anchor;
  std::int64_t anchor_s = 0;
  bool anchor_set = false;
  if (preperiod == 0) {
    if (small)
      anchor_s = rs;
    else
      anchor = r;
    anchor_set = true;
  }

  enum class Stop { terminated, digit_one, cycle };
  Stop stop;
  unsigned long cycle_len = 0;

  while (true) {
    int digit;
    bool at_zero;
    if (small) {
      rs *= 3;
      digit = rs >= 2 * qs ? 2 : (rs >= qs ? 1 : 0);
      rs -= digit * qs;
      at_zero = rs == 0;
    } else {
      r *= 3;
      mpz_class d3 = r / q;
      digit = static_cast<int>(d3.get_si());
      r -= d3 * q;
      at_zero = r == 0;
    }
    if (digit == 1) {
      stop = Stop::digit_one;
      break;
    }
    push_bit(digit == 2 ? 1 : 0);
    if (at_zero) {
      stop = Stop::terminated;
      break;
    }
    if (!anchor_set) {
      if (emitted == preperiod) {
        if (small)
          anchor_s = rs;
        else
          anchor = r;
        anchor_set = true;
      }
    } else if (emitted > preperiod && (small ? rs == anchor_s : r == anchor)) {
      stop = Stop::cycle;
      cycle_len = emitted - preperiod;
      break;
    }
  }

  // materialize the collected bits as an integer, MSB first
  mpz_class prefix(0);
  auto append_bits = [&prefix](std::uint64_t w, int nbits) {
    mpz_mul_2exp(prefix.get_mpz_t(), prefix.get_mpz_t(), static_cast<unsigned long>(nbits));
    mpz_class hi(static_cast<unsigned long>(w >> 32));
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 32);
    prefix += hi + mpz_class(static_cast<unsigned long>(w & 0xffffffffUL));
  };
  for (std::uint64_t w : words) append_bits(w, 64);
  if (buf_bits > 0) append_bits(buf, buf_bits);

  auto two_pow = [](unsigned long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return p;
  };

  switch (stop) {
    case Stop::terminated:
      return Rational(prefix, two_pow(emitted));
    case Stop::digit_one:
      // the terminating 1 sits one position past the collected bits
      return Rational(prefix * 2 + 1, two_pow(emitted + 1));
    case Stop::cycle: {
      mpz_class mod = two_pow(cycle_len) - 1;
      mpz_class p_bits, shifted;
      mpz_tdiv_q_2exp(p_bits.get_mpz_t(), prefix.get_mpz_t(), cycle_len);
      mpz_mul_2exp(shifted.get_mpz_t(), p_bits.get_mpz_t(), cycle_len);
      mpz_class c_bits = prefix - shifted;
      return Rational(p_bits * mod + c_bits, two_pow(preperiod) * mod);
    }
  }
  throw std::logic_error("cantor_value: unreachable");
}

enum class NonlinearityClass { empty, finite, nowhere_dense_null, positive_measure };

inline const char* to_string(NonlinearityClass c) {
  switch (c) {
    case NonlinearityClass::empty: return "empty";
    case NonlinearityClass::finite: return "finite";
    case NonlinearityClass::nowhere_dense_null: return "nowhere-dense-null";
    case NonlinearityClass::positive_measure: return "positive-measure";
  }
  return "?";
}

class Mapping;

struct AffineMap {
  Rational a, b;  // t -> a*t + b
};

struct PolynomialMap {
  std::vector<Rational> coeffs;  // ascending powers, degree <= 8
};

// Continuous piecewise-linear function: interpolates (breakpoints[i],
// values[i]) and extends by the given slopes beyond the ends. Continuity is
// inherent in the representation.
struct PiecewiseLinearMap {
  std::vector<Rational> breakpoints;  // strictly increasing, nonempty
  std::vector<Rational> values;
  Rational left_slope, right_slope;
};

struct CantorMap {};  // staircase on [0,1], 0 left of it, 1 right of it

struct CompositeMap {
  Rational a, b;  // outer affine
  std::shared_ptr<const Mapping> inner;
};

struct ClampedMap {
  Rational lo, hi;  // evaluate inner at clamp(t, lo, hi)
  std::shared_ptr<const Mapping> inner;
};

// Closed catalog of continuous R -> R mappings with exact evaluation.
class Mapping {
 public:
  using Node = std::variant<AffineMap, PolynomialMap, PiecewiseLinearMap, CantorMap,
                            CompositeMap, ClampedMap>;

  static Mapping affine(Rational a, Rational b) {
    return Mapping(AffineMap{std::move(a), std::move(b)});
  }

  static Mapping polynomial(std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() > 9) throw std::invalid_argument("Mapping: polynomial degree exceeds 8");
    return Mapping(PolynomialMap{std::move(coeffs)});
  }

  static Mapping piecewise_linear(std::vector<Rational> breakpoints, std::vector<Rational> values,
                                  Rational left_slope, Rational right_slope) {
    if (breakpoints.empty() || breakpoints.size() != values.size())
      throw std::invalid_argument("Mapping: breakpoints/values size mismatch or empty");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i]))
        throw std::invalid_argument("Mapping: breakpoints must strictly increase");
    return Mapping(PiecewiseLinearMap{std::move(breakpoints), std::move(values),
                                      std::move(left_slope), std::move(right_slope)});
  }

  static Mapping cantor() { return Mapping(CantorMap{}); }

  static Mapping composite(Rational a, Rational b, Mapping inner) {
    return Mapping(CompositeMap{std::move(a), std::move(b),
                                std::make_shared<const Mapping>(std::move(inner))});
  }

  static Mapping clamped(Rational lo, Rational hi, Mapping inner) {
    if (!(lo < hi)) throw std::invalid_argument("Mapping: clamp interval needs lo < hi");
    return Mapping(ClampedMap{std::move(lo), std::move(hi),
                              std::make_shared<const Mapping>(std::move(inner))});
  }

  Rational eval(const Rational& t) const {
    if (const auto* m = std::get_if<AffineMap>(&node_)) return m->a * t + m->b;
    if (const auto* m = std::get_if<PolynomialMap>(&node_)) {
      Rational acc(0);
      for (auto it = m->coeffs.rbegin(); it != m->coeffs.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    if (const auto* m = std::get_if<PiecewiseLinearMap>(&node_)) {
      const auto& bp = m->breakpoints;
      if (t <= bp.front()) return m->values.front() + m->left_slope * (t - bp.front());
      if (t >= bp.back()) return m->values.back() + m->right_slope * (t - bp.back());
      std::size_t hi = 1;
      while (bp[hi] < t) ++hi;  // bp[hi-1] <= t <= bp[hi], t strictly inside the hull
      const Rational& t0 = bp[hi - 1];
      const Rational& t1 = bp[hi];
      return m->values[hi - 1] + (m->values[hi] - m->values[hi - 1]) * (t - t0) / (t1 - t0);
    }
    if (std::get_if<CantorMap>(&node_)) {
      if (t.sign() < 0) return Rational(0);
      if (t > Rational(1)) return Rational(1);
      return cantor_value(t);
    }
    if (const auto* m = std::get_if<CompositeMap>(&node_)) return m->a * m->inner->eval(t) + m->b;
    const auto& m = std::get<ClampedMap>(node_);
    if (t < m.lo) return m.inner->eval(m.lo);
    if (t > m.hi) return m.inner->eval(m.hi);
    return m.inner->eval(t);
  }

  // Declared size class of {t : f is not affine near t}; tells which
  // progression searches can be expected to succeed.
  NonlinearityClass nonlinearity_class() const {
    if (std::get_if<AffineMap>(&node_)) return NonlinearityClass::empty;
    if (const auto* m = std::get_if<PolynomialMap>(&node_))
      return m->coeffs.size() > 2 ? NonlinearityClass::positive_measure : NonlinearityClass::empty;
    if (std::get_if<PiecewiseLinearMap>(&node_)) return NonlinearityClass::finite;
    if (std::get_if<CantorMap>(&node_)) return NonlinearityClass::nowhere_dense_null;
    if (const auto* m = std::get_if<CompositeMap>(&node_))
      return m->a.is_zero() ? NonlinearityClass::empty : m->inner->nonlinearity_class();
    const auto& m = std::get<ClampedMap>(node_);
    NonlinearityClass inner = m.inner->nonlinearity_class();
    return inner == NonlinearityClass::empty ? NonlinearityClass::finite : inner;
  }

  const Node& node() const { return node_; }

 private:
  explicit Mapping(Node n) : node_(std::move(n)) {}
  Node node_;
};

// Restriction of f to [lo, hi], extended constant on both sides.
inline Mapping extend_constant(Mapping f, Rational lo, Rational hi) {
  return Mapping::clamped(std::move(lo), std::move(hi), std::move(f));
}

// Inline mapping descriptions for the command line:
//   "affine:A,B"     t -> A*t + B
//   "poly:C0,C1,..." ascending coefficients
//   "cantor"         staircase
inline std::optional<Mapping> parse_mapping_spec(std::string_view spec) {
  auto parse_list = [](std::string_view body) -> std::optional<std::vector<Rational>> {
    std::vector<Rational> out;
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view tok = body.substr(0, comma);
      auto r = Rational::try_parse(tok);
      if (!r) return std::nullopt;
      out.push_back(std::move(*r));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
      if (body.empty()) return std::nullopt;
    }
    return out;
  };
  if (spec == "cantor") return Mapping::cantor();
  if (spec.rfind("affine:", 0) == 0) {
    auto vals = parse_list(spec.substr(7));
    if (!vals || vals->size() != 2) return std::nullopt;
    return Mapping::affine((*vals)[0], (*vals)[1]);
  }
  if (spec.rfind("poly:", 0) == 0) {
    auto vals = parse_list(spec.substr(5));
    if (!vals || vals->empty() || vals->size() > 9) return std::nullopt;
    return Mapping::polynomial(std::move(*vals));
  }
  return std::nullopt;
}

}  // namespace apsidon
