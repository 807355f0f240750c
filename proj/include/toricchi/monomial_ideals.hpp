#pragma once

#include <cstdint>
#include <vector>

#include "toricchi/fan.hpp"
#include "toricchi/index_set.hpp"
#include "toricchi/simplicial_homology.hpp"

namespace toricchi {

/// A squarefree monomial ideal in 𝕂[x_1..x_d], stored as the supports of its
/// minimal generators. Generators are kept minimal and sorted by size, then
/// lexicographically.
class SquarefreeIdeal {
 public:
  /// Non-minimal generators are discarded. Throws MalformedInput if a support
  /// uses an index ≥ d.
  SquarefreeIdeal(int d, std::vector<IndexSet> generators);

  int ambient_dim() const { return d_; }
  const std::vector<IndexSet>& generators() const { return gens_; }

  /// True iff the squarefree monomial with this support lies in the ideal.
  bool contains(IndexSet support) const;

  /// The complex {σ ⊆ [d] : x^σ ∉ I}. Void for the unit ideal.
  SimplicialComplex stanley_reisner_complex() const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int d_;
  std::vector<IndexSet> gens_;
};

/// A squarefree degree m ∈ {0,1}^d.
class FineWeight {
 public:
  FineWeight(int d, IndexSet support);
  /// Throws MalformedInput on entries other than 0 or 1.
  static FineWeight from_vector(const std::vector<int>& entries);

  int ambient_dim() const { return d_; }
  IndexSet support() const { return support_; }
  /// |m|
  int degree() const { return support_.size(); }
  /// 1 - m
  FineWeight complement() const { return {d_, IndexSet::full(d_) - support_}; }
  std::vector<int> entries() const;

  friend bool operator==(const FineWeight&, const FineWeight&) = default;

 private:
  int d_;
  IndexSet support_;
};

/// The Stanley-Reisner ring presentation of the rational Chow ring: the
/// Stanley-Reisner generators and the n linear forms Σ_ρ ⟨e_i, v_ρ⟩ x_ρ.
struct ChowPresentation {
  SquarefreeIdeal stanley_reisner;
  /// linear_forms[i][ρ] = i-th coordinate of v_ρ.
  std::vector<IntVector> linear_forms;
};

/// I_Σ: generated by the minimal nonfaces of P_Σ.
SquarefreeIdeal stanley_reisner(const Fan& fan);

/// B(Σ): generated by x^{σ̂} for the maximal cones σ.
SquarefreeIdeal irrelevant_ideal(const Fan& fan);

/// Minimal transversals of the generator supports. Throws MalformedInput when
/// the ambient dimension is zero.
SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal);

/// dim (S/I_Σ)_a for a squarefree degree a: 1 iff support(a) is a face.
int sr_dim(const FaceComplex& complex, const FineWeight& a);
int sr_dim(const Fan& fan, const FineWeight& a);

/// dim Tor_i(S/I, 𝕂)_a by Hochster's formula:
///   rank H̃^{|a|-i-1}(Δ_I|_{supp a}).
/// For the ideal itself use Tor_i(I, 𝕂) = Tor_{i+1}(S/I, 𝕂).
std::int64_t tor_dim(const SquarefreeIdeal& ideal, int i, const FineWeight& a);

ChowPresentation chow_presentation(const Fan& fan);

}  // namespace toricchi
