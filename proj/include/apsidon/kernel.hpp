#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "apsidon/constraints.hpp"

namespace apsidon {

// (Sum v_j, Sum v_j k_j, Sum v_j k_j^2): the image of v under the 3x4 moment
// matrix with rows (1..1), (k_j), (k_j^2).
inline std::array<std::int64_t, 3> moment_image(const std::array<int, 4>& k,
                                                const std::array<int, 4>& v) {
  std::array<std::int64_t, 3> out{0, 0, 0};
  for (int j = 0; j < 4; ++j) {
    const auto vj = static_cast<std::int64_t>(v[static_cast<std::size_t>(j)]);
    const auto kj = static_cast<std::int64_t>(k[static_cast<std::size_t>(j)]);
    out[0] += vj;
    out[1] += vj * kj;
    out[2] += vj * kj * kj;
  }
  return out;
}

// Determinant of the 4x4 matrix {k_j^q}, q = 0..3, by cofactor expansion.
// Entries stay below 2^18 for k <= 64, so every term fits comfortably in 64
// bits. Tests cross-check against the product-of-differences closed form.
inline std::int64_t vandermonde_det4(const std::array<int, 4>& k) {
  std::array<std::array<std::int64_t, 4>, 4> m{};
  for (int j = 0; j < 4; ++j) {
    std::int64_t p = 1;
    for (int q = 0; q < 4; ++q) {
      m[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] = p;
      p *= k[static_cast<std::size_t>(j)];
    }
  }
  auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    const auto& a = m[static_cast<std::size_t>(r0)];
    const auto& b = m[static_cast<std::size_t>(r1)];
    const auto& c = m[static_cast<std::size_t>(r2)];
    auto i0 = static_cast<std::size_t>(c0);
    auto i1 = static_cast<std::size_t>(c1);
    auto i2 = static_cast<std::size_t>(c2);
    return a[i0] * (b[i1] * c[i2] - b[i2] * c[i1]) - a[i1] * (b[i0] * c[i2] - b[i2] * c[i0]) +
           a[i2] * (b[i0] * c[i1] - b[i1] * c[i0]);
  };
  std::int64_t det = 0;
  int sign = 1;
  const std::array<std::array<int, 3>, 4> drop{{{{1, 2, 3}}, {{0, 2, 3}}, {{0, 1, 3}}, {{0, 1, 2}}}};
  for (int c = 0; c < 4; ++c) {
    const auto& cols = drop[static_cast<std::size_t>(c)];
    det += sign * m[0][static_cast<std::size_t>(c)] * det3(1, 2, 3, cols[0], cols[1], cols[2]);
    sign = -sign;
  }
  return det;
}

struct KernelCounterexample {
  std::array<int, 4> k;
  int vector_index;  // offending vector, or -1 when the determinant vanished
};

struct KernelReport {
  int k_max;
  long tuples_checked;
  std::vector<KernelCounterexample> counterexamples;  // empty, or the first found
};

/*
 * For every ordered 4-tuple of pairwise-distinct integers in [1, K]: the
 * matrix {k_j^q} is nonsingular and no constraint vector lies in the kernel
 * of the moment matrix. Stops at the first counterexample (none exists; the
 * report shape keeps the check honest). K is capped so the integer
 * arithmetic stays exact in 64 bits.
 */
inline KernelReport verify_kernel(int k_max) {
  if (k_max < 4) throw std::invalid_argument("verify_kernel: K >= 4 required");
  if (k_max > 64) throw std::invalid_argument("verify_kernel: K <= 64 keeps arithmetic exact");
  KernelReport report{k_max, 0, {}};
  std::array<int, 4> k{};
  for (k[0] = 1; k[0] <= k_max; ++k[0])
    for (k[1] = 1; k[1] <= k_max; ++k[1]) {
      if (k[1] == k[0]) continue;
      for (k[2] = 1; k[2] <= k_max; ++k[2]) {
        if (k[2] == k[0] || k[2] == k[1]) continue;
        for (k[3] = 1; k[3] <= k_max; ++k[3]) {
          if (k[3] == k[0] || k[3] == k[1] || k[3] == k[2]) continue;
          ++report.tuples_checked;
          if (vandermonde_det4(k) == 0) {
            report.counterexamples.push_back(KernelCounterexample{k, -1});
            return report;
          }
          for (int vi = 0; vi < static_cast<int>(kConstraintVectors.size()); ++vi) {
            const auto img = moment_image(k, kConstraintVectors[static_cast<std::size_t>(vi)]);
            if (img[0] == 0 && img[1] == 0 && img[2] == 0) {
              report.counterexamples.push_back(KernelCounterexample{k, vi});
              return report;
            }
          }
        }
      }
    }
  return report;
}

}  // namespace apsidon
