#pragma once

#include <cstdint>
#include <vector>

#include "toricchi/index_set.hpp"

namespace toricchi {

/// A finite abstract simplicial complex on the vertex set {0, ..., n-1}.
///
/// Stored by its facets. Two degenerate complexes are distinguished: the
/// *empty complex* {∅}, whose only face is the empty face, and the *void
/// complex*, which has no faces at all.
class SimplicialComplex {
 public:
  /// The void complex on `vertex_count` vertices.
  explicit SimplicialComplex(int vertex_count = 0);

  /// Generated by `generators`; non-maximal generators are dropped.
  SimplicialComplex(int vertex_count, std::vector<IndexSet> generators);

  static SimplicialComplex void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count);
  }
  static SimplicialComplex empty_complex(int vertex_count) {
    return SimplicialComplex(vertex_count, {IndexSet{}});
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<IndexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }

  /// All faces including ∅, sorted by (size, bitmask).
  std::vector<IndexSet> faces() const;

  bool is_face(IndexSet s) const;

  /// Dimension of the largest facet; -1 for the empty complex and -2 for the
  /// void complex.
  int dimension() const;

  /// Δ|_W = { σ ∈ Δ : σ ⊆ W }.
  SimplicialComplex induced(IndexSet vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_;
  std::vector<IndexSet> facets_;
};

/// Ranks of reduced homology H̃_i over ℚ for i = -1, 0, ..., dim.
class BettiVector {
 public:
  BettiVector() = default;
  explicit BettiVector(std::vector<std::int64_t> ranks_from_minus_one)
      : ranks_(std::move(ranks_from_minus_one)) {}

  /// rank H̃_i; zero outside the stored range.
  std::int64_t operator[](int i) const {
    const int k = i + 1;
    return (k >= 0 && k < static_cast<int>(ranks_.size())) ? ranks_[k] : 0;
  }

  /// Σ (-1)^i rank H̃_i.
  std::int64_t euler_characteristic() const;

  const std::vector<std::int64_t>& ranks() const { return ranks_; }

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  std::vector<std::int64_t> ranks_;
};

/// Reduced homology ranks over ℚ from exact ranks of the boundary maps.
/// H̃_{-1}(empty complex) has rank 1; the void complex has no homology.
BettiVector reduced_betti(const SimplicialComplex& complex);

/// Σ over faces σ (including ∅) of (-1)^{dim σ}; equals the alternating sum
/// of reduced Betti numbers.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex);

}  // namespace toricchi
