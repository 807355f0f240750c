#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricchi/fan.hpp"
#include "toricchi/integer_matrix.hpp"
#include "toricchi/monomial_ideals.hpp"

namespace toricchi {

/// Frobenius-power exponent bound from the ray matrix A:
///   a = max |entry|, b = max |(n-1)×(n-1) minor|, c = min |nonzero n×n minor|,
///   l_min = max(1, ⌈n² · max_ρ |a_ρ| · a · b / c⌉).
/// For n = 1 the only 0×0 minor is 1.
struct ExponentBound {
  Integer a;
  Integer b;
  Integer c;
  std::int64_t l_min = 1;
};

/// Throws ComputationError if every n×n minor vanishes.
ExponentBound ems_bound(const Fan& fan, const WeilDivisor& divisor);

struct ChiTraceRow {
  FineWeight weight;
  /// dim (S/I_Σ)_{1-m}
  int face_indicator = 0;
  /// l·m + a, a divisor in the class l·φ(m) + D.
  IntVector degree;
  std::int64_t dim_s = 0;
  int sign = 1;
  std::int64_t contribution = 0;
};

/// Every term of the Euler characteristic sum, one row per nonzero m ∈ {0,1}^d
/// in increasing bitmask order of supp(m).
struct ChiTrace {
  std::int64_t l = 1;
  std::vector<ChiTraceRow> rows;
  std::int64_t total = 0;
};

/// χ(O_X(D)) = Σ_{m ∈ {0,1}^d \ 0} (-1)^{|m|-d+n} dim(S/I_Σ)_{1-m} · dim S_{l·m+a}.
/// `l` defaults to ems_bound(...).l_min. Throws MalformedInput when l < 1 or
/// the divisor length is wrong. The fan must be valid.
std::int64_t chi(const Fan& fan, const WeilDivisor& divisor,
                 std::optional<std::int64_t> l = std::nullopt);

/// Same sum with every row evaluated, including the ones whose face indicator
/// kills them.
ChiTrace chi_trace(const Fan& fan, const WeilDivisor& divisor,
                   std::optional<std::int64_t> l = std::nullopt);

}  // namespace toricchi
