#pragma once

#include <vector>

#include "toricchi/fan.hpp"
#include "toricchi/integer_matrix.hpp"

namespace toricchi {

/// U · A · V = D with U, V unimodular and D diagonal with d_1 | d_2 | ... .
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix u_inverse;
  IntegerMatrix d;
  IntegerMatrix v;
  /// Nonzero diagonal entries of D, all positive, in divisibility order.
  std::vector<Integer> invariant_factors;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// An element of Cl(X_Σ) ≅ ⊕ ℤ/d_i ⊕ ℤ^{free rank}, in Smith coordinates.
struct DivisorClass {
  /// One residue in [0, d_i) per invariant factor d_i > 1.
  std::vector<Integer> torsion;
  std::vector<Integer> free;

  bool is_zero() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Cl(X_Σ) = ℤ^d / im(ψ), where ψ(m) = (⟨m, v_ρ⟩)_ρ, i.e. the cokernel of the
/// ray matrix A.
class ClassGroupPresentation {
 public:
  explicit ClassGroupPresentation(const IntegerMatrix& ray_matrix);

  const IntegerMatrix& ray_matrix() const { return a_; }
  const SmithForm& smith() const { return snf_; }
  std::size_t ray_count() const { return a_.rows(); }
  std::size_t rank() const { return snf_.invariant_factors.size(); }
  std::size_t free_rank() const { return a_.rows() - rank(); }
  /// All invariant factors of im(ψ), including the trivial ones.
  const std::vector<Integer>& invariant_factors() const {
    return snf_.invariant_factors;
  }
  /// The invariant factors greater than 1.
  std::vector<Integer> torsion_orders() const;

  /// φ(a). Throws MalformedInput on a length mismatch.
  DivisorClass class_of(const std::vector<Integer>& a) const;
  DivisorClass class_of(const WeilDivisor& divisor) const;

  /// Some a ∈ ℤ^d with class_of(a) == c. Throws MalformedInput when c has
  /// the wrong shape or out-of-range residues.
  std::vector<Integer> representative(const DivisorClass& c) const;

  DivisorClass add(const DivisorClass& x, const DivisorClass& y) const;
  DivisorClass negate(const DivisorClass& x) const;
  DivisorClass scale(const Integer& k, const DivisorClass& x) const;

 private:
  DivisorClass reduce(std::vector<Integer> torsion, std::vector<Integer> free) const;

  IntegerMatrix a_;
  SmithForm snf_;
  // Positions on the diagonal holding the torsion invariant factors.
  std::vector<std::size_t> torsion_rows_;
};

ClassGroupPresentation class_group(const Fan& fan);

}  // namespace toricchi
