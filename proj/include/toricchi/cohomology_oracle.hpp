#pragma once

#include <cstdint>
#include <vector>

#include "toricchi/fan.hpp"

namespace toricchi {

/// A lattice point m whose subcomplex has nonzero reduced cohomology.
struct PointContribution {
  IntVector point;
  /// The rays with ⟨m, v_ρ⟩ < -a_ρ.
  IndexSet negative_rays;
  /// contributions[i] = rank H̃^{i-1} of the induced subcomplex, i = 0..n.
  std::vector<std::int64_t> contributions;
};

struct CohomologyVector {
  /// h^0 ... h^n
  std::vector<std::int64_t> h;
  /// Filled only when requested.
  std::vector<PointContribution> points;

  /// Σ (-1)^i h^i
  std::int64_t euler_characteristic() const;
};

struct OracleOptions {
  /// Lattice units added on every side of the arrangement's vertex box.
  int margin = 1;
  bool record_points = false;
};

/// h^i(O_X(D)) = Σ_{m ∈ M} rank H̃^{i-1}(P_Σ|_{N(m)}), N(m) = {ρ : ⟨m, v_ρ⟩ < -a_ρ}.
///
/// The sum runs over the integer box around all vertices of the hyperplane
/// arrangement {⟨m, v_ρ⟩ = -a_ρ}, widened by `margin`. Points outside it lie in
/// unbounded cells, whose subcomplexes are acyclic for a complete fan.
CohomologyVector cohomology_dims(const Fan& fan, const WeilDivisor& divisor,
                                 const OracleOptions& options = {});

/// h^0 via the graded dimension, dim S_[D].
std::int64_t h0(const Fan& fan, const WeilDivisor& divisor);

}  // namespace toricchi
