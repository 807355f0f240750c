#pragma once

#include <cstdint>
#include <vector>

#include "toricchi/fan.hpp"
#include "toricchi/integer_matrix.hpp"

namespace toricchi {

/// P_D = { m ∈ ℝ^n : ⟨m, v_ρ⟩ ≥ -a_ρ for all ρ }, with exact rational vertices
/// and an integer bounding box.
struct DivisorPolyhedron {
  /// Rows v_ρ of the inequality system.
  std::vector<IntVector> normals;
  /// Right-hand sides -a_ρ.
  IntVector lower_bounds;
  /// Distinct vertices; empty iff the polyhedron is empty.
  std::vector<std::vector<Rational>> vertices;
  /// Integer box [box_min, box_max] containing every vertex. Meaningless when
  /// the polyhedron is empty.
  IntVector box_min;
  IntVector box_max;

  int dim() const { return normals.empty() ? 0 : static_cast<int>(normals[0].size()); }
  bool empty() const { return vertices.empty(); }
  bool contains(const std::vector<Rational>& point) const;
  bool contains(const IntVector& point) const;
};

/// Builds P_D from all invertible n×n subsystems. Throws ComputationError if
/// the polyhedron is nonempty and unbounded, which a complete fan never gives.
DivisorPolyhedron divisor_polytope(const Fan& fan, const WeilDivisor& divisor);

/// Integer points of P_D, by scanning the box in the first n-1 coordinates
/// and solving the inequalities exactly for the last one.
std::int64_t count_lattice_points(const DivisorPolyhedron& polyhedron);

/// dim S_α for α = [D]: the number of Cox ring monomials of that class.
std::int64_t dim_S(const Fan& fan, const WeilDivisor& divisor);

/// Every vertex of the hyperplane arrangement {⟨m, v_ρ⟩ = -a_ρ}, feasible or
/// not. Shared with the cohomology oracle.
std::vector<std::vector<Rational>> arrangement_vertices(const Fan& fan,
                                                        const WeilDivisor& divisor);

/// True iff { w : ⟨w, v_ρ⟩ ≥ 0 for all ρ } contains a nonzero vector.
bool has_recession_direction(const Fan& fan);

}  // namespace toricchi
