#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricchi/index_set.hpp"
#include "toricchi/integer_matrix.hpp"
#include "toricchi/simplicial_homology.hpp"

namespace toricchi {

using IntVector = std::vector<std::int64_t>;

/// Largest supported ray count. Several computations enumerate {0,1}^d.
inline constexpr int kMaxRays = 30;

/// A rational fan given by primitive ray generators and maximal cones.
///
/// Rays keep their input order; every index set elsewhere (cones, ideal
/// generators, fine weights) refers to that order. The constructor checks
/// shape only. Use validate_fan() for the complete simplicial invariants.
class Fan {
 public:
  /// Throws MalformedInput on shape errors: dim < 1, no rays, a ray of the
  /// wrong length, a cone index out of range or repeated within a cone, no
  /// cones, or more than kMaxRays rays.
  Fan(int dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones);

  /// Convenience constructor taking 1-based cone index lists.
  static Fan from_one_based(int dim, std::vector<IntVector> rays,
                            const std::vector<std::vector<int>>& max_cones);

  int dim() const { return dim_; }
  int ray_count() const { return static_cast<int>(rays_.size()); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(int i) const { return rays_[i]; }
  const std::vector<IndexSet>& max_cones() const { return max_cones_; }

  /// The d×n matrix A whose rows are the ray generators.
  IntegerMatrix ray_matrix() const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  int dim_;
  std::vector<IntVector> rays_;
  std::vector<IndexSet> max_cones_;
};

/// D = Σ a_ρ D_ρ, coefficients in ray order.
struct WeilDivisor {
  IntVector coeffs;

  int size() const { return static_cast<int>(coeffs.size()); }
  friend bool operator==(const WeilDivisor&, const WeilDivisor&) = default;
};

/// Throws MalformedInput unless the divisor has one coefficient per ray.
void check_divisor_length(const Fan& fan, const WeilDivisor& divisor);

enum class ViolationKind {
  NonPrimitiveRay,
  DuplicateRay,
  ConeNotFullDimensional,
  DependentCone,
  DuplicateCone,
  UnusedRay,
  RidgeCondition,
  SphereHomology,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Checks the complete simplicial fan hypotheses. Completeness is checked via
/// two exactly computable proxies: the ridge (pseudomanifold) condition and
/// the face complex having the reduced ℚ-homology of an (n-1)-sphere.
ValidationReport validate_fan(const Fan& fan);

/// Throws InvalidFan with the first violation when validation fails.
void require_valid(const Fan& fan);

/// The simplicial complex P_Σ on the ray indices: all subsets of maximal
/// cones, including ∅.
using FaceComplex = SimplicialComplex;

FaceComplex face_complex(const Fan& fan);

/// Throws std::out_of_range if `subset` has an index ≥ vertex count.
bool is_face(const FaceComplex& complex, IndexSet subset);

}  // namespace toricchi
