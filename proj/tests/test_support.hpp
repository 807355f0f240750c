#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toricchi/fan.hpp"
#include "toricchi/library.hpp"

namespace toricchi::testing {

inline const Fan& hirzebruch2() { return bundled_fan("hirzebruch2"); }
inline const Fan& p2() { return bundled_fan("p2"); }

inline WeilDivisor random_divisor(int d, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  WeilDivisor out;
  for (int i = 0; i < d; ++i) out.coeffs.push_back(dist(rng));
  return out;
}

inline IntVector random_vector(int n, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  IntVector out(n);
  for (auto& x : out) x = dist(rng);
  return out;
}

/// a + A·m, a linearly equivalent divisor.
inline WeilDivisor add_principal(const Fan& fan, const WeilDivisor& a, const IntVector& m) {
  WeilDivisor out = a;
  for (int rho = 0; rho < fan.ray_count(); ++rho) {
    for (int j = 0; j < fan.dim(); ++j) out.coeffs[rho] += fan.ray(rho)[j] * m[j];
  }
  return out;
}

}  // namespace toricchi::testing
