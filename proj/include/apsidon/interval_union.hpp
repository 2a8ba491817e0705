#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apsidon/rational.hpp"

namespace apsidon {

// Finite union of closed rational intervals in canonical form: sorted,
// pairwise disjoint, non-touching, each of positive length. Degenerate
// inputs [a, a] are dropped; touching or overlapping inputs are merged.
class IntervalUnion {
 public:
  using Interval = std::pair<Rational, Rational>;

  IntervalUnion() = default;

  explicit IntervalUnion(std::vector<Interval> intervals) {
    for (const auto& iv : intervals)
      if (iv.second < iv.first)
        throw std::invalid_argument("IntervalUnion: interval with left > right");
    std::erase_if(intervals, [](const Interval& iv) { return iv.first == iv.second; });
    std::sort(intervals.begin(), intervals.end());
    for (auto& iv : intervals) {
      if (!parts_.empty() && iv.first <= parts_.back().second) {
        if (parts_.back().second < iv.second) parts_.back().second = std::move(iv.second);
      } else {
        parts_.push_back(std::move(iv));
      }
    }
  }

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  Rational measure() const {
    Rational total(0);
    for (const auto& [lo, hi] : parts_) total += hi - lo;
    return total;
  }

  bool contains(const Rational& t) const {
    const auto* part = locate(t);
    return part != nullptr && t <= part->second;
  }

  // strict interior of the union: inside some part, excluding its endpoints
  bool interior_contains(const Rational& t) const {
    const auto* part = locate(t);
    return part != nullptr && part->first < t && t < part->second;
  }

  // canonical non-touching parts make per-part containment the whole test
  bool subset_of(const IntervalUnion& other) const {
    for (const auto& [lo, hi] : parts_) {
      const auto* part = other.locate(lo);
      if (part == nullptr || hi > part->second) return false;
    }
    return true;
  }

  friend bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
    return a.parts_ == b.parts_;
  }

 private:
  // rightmost part with left endpoint <= t, or nullptr
  const Interval* locate(const Rational& t) const {
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [&](const Interval& iv) { return iv.first <= t; });
    if (it == parts_.begin()) return nullptr;
    return &*std::prev(it);
  }

  std::vector<Interval> parts_;
};

// Measure of the intersection of the two closed unions; isolated touching
// points contribute nothing.
inline Rational closure_density_intersection(const IntervalUnion& u1, const IntervalUnion& u2) {
  Rational total(0);
  const auto& a = u1.intervals();
  const auto& b = u2.intervals();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].first, b[j].first);
    const Rational& hi = std::min(a[i].second, b[j].second);
    if (lo < hi) total += hi - lo;
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return total;
}

/*
 * Smith-Volterra-Cantor stage m in [0, 1]: step k removes the open middle
 * interval of length 4^-k from each of the 2^(k-1) pieces, leaving 2^m
 * closed intervals of equal length and total measure 1 - sum 2^(k-1)/4^k.
 * The removed length shrinks faster than the pieces, so every piece keeps
 * positive length at every stage.
 */
inline IntervalUnion fat_cantor(int stage) {
  if (stage < 0) throw std::invalid_argument("fat_cantor: stage >= 0 required");
  if (stage > 20) throw std::invalid_argument("fat_cantor: stage capped at 20");
  std::vector<IntervalUnion::Interval> parts{{Rational(0), Rational(1)}};
  for (int k = 1; k <= stage; ++k) {
    const Rational half_gap(1, 2L * (1L << (2 * k)));  // (1/4^k)/2
    std::vector<IntervalUnion::Interval> next;
    next.reserve(parts.size() * 2);
    for (const auto& [lo, hi] : parts) {
      const Rational mid = (lo + hi) / Rational(2);
      next.emplace_back(lo, mid - half_gap);
      next.emplace_back(mid + half_gap, hi);
    }
    parts = std::move(next);
  }
  return IntervalUnion(std::move(parts));
}

/*
 * One small closed interval of length 4^-(stage+2) centered in each gap of
 * fat_cantor(stage). The narrowest gap (from the final stage) has length
 * 4^-stage, sixteen times the probe length, so probes sit strictly inside
 * their gaps and the result is disjoint from the generator set.
 */
inline IntervalUnion fat_cantor_gap_probes(int stage) {
  const IntervalUnion base = fat_cantor(stage);
  const Rational half_probe(1, 2L * (1L << (2 * (stage + 2))));
  std::vector<IntervalUnion::Interval> probes;
  const auto& parts = base.intervals();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const Rational center = (parts[i - 1].second + parts[i].first) / Rational(2);
    probes.emplace_back(center - half_probe, center + half_probe);
  }
  return IntervalUnion(std::move(probes));
}

}  // namespace apsidon
