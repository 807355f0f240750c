#include "toricchi/simplicial_homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toricchi/integer_matrix.hpp"

namespace toricchi {

namespace {

std::vector<IndexSet> maximal_elements(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> out;
  for (IndexSet s : sets) {
    const bool covered = std::any_of(out.begin(), out.end(),
                                     [s](IndexSet f) { return s.is_subset_of(f); });
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), support_less);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count) : vertex_count_(vertex_count) {}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<IndexSet> generators)
    : vertex_count_(vertex_count), facets_(maximal_elements(std::move(generators))) {}

std::vector<IndexSet> SimplicialComplex::faces() const {
  std::set<IndexSet> all;
  for (IndexSet f : facets_) {
    for_each_subset(f, [&](IndexSet s) { all.insert(s); });
  }
  std::vector<IndexSet> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(),
                   [](IndexSet a, IndexSet b) { return a.size() < b.size(); });
  return out;
}

bool SimplicialComplex::is_face(IndexSet s) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [s](IndexSet f) { return s.is_subset_of(f); });
}

int SimplicialComplex::dimension() const {
  int dim = -2;
  for (IndexSet f : facets_) dim = std::max(dim, f.size() - 1);
  return dim;
}

SimplicialComplex SimplicialComplex::induced(IndexSet vertices) const {
  if (is_void()) return SimplicialComplex(vertex_count_);
  std::vector<IndexSet> restricted;
  restricted.reserve(facets_.size());
  for (IndexSet f : facets_) restricted.push_back(f & vertices);
  return SimplicialComplex(vertex_count_, std::move(restricted));
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    // k = i + 1
    chi += (k % 2 == 1) ? ranks_[k] : -ranks_[k];
  }
  return chi;
}

BettiVector reduced_betti(const SimplicialComplex& complex) {
  if (complex.is_void()) return BettiVector{};

  const int top = complex.dimension();
  // by_size[k] lists the faces with k vertices, i.e. dimension k - 1.
  std::vector<std::vector<IndexSet>> by_size(top + 2);
  for (IndexSet f : complex.faces()) by_size[f.size()].push_back(f);

  // boundary_rank[k] = rank of ∂ : C_{k-1} -> C_{k-2}, from size-k faces to
  // size-(k-1) faces. Index 0 is the zero map out of C_{-2} = 0.
  std::vector<std::int64_t> boundary_rank(top + 3, 0);
  for (int k = 1; k <= top + 1; ++k) {
    const auto& rows = by_size[k - 1];
    const auto& cols = by_size[k];
    std::map<IndexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    IntegerMatrix boundary(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (int v : cols[c].elements()) {
        boundary(row_of.at(cols[c].without(v)), c) = sign;
        sign = -sign;
      }
    }
    boundary_rank[k] = static_cast<std::int64_t>(rank(std::move(boundary)));
  }

  std::vector<std::int64_t> ranks(top + 2);
  for (int k = 0; k <= top + 1; ++k) {
    // H̃_{k-1} = dim C_{k-1} - rank ∂_{out of size k} - rank ∂_{into size k}
    ranks[k] = static_cast<std::int64_t>(by_size[k].size()) - boundary_rank[k] -
               boundary_rank[k + 1];
  }
  return BettiVector(std::move(ranks));
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& complex) {
  std::int64_t chi = 0;
  for (IndexSet f : complex.faces()) chi += (f.size() % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace toricchi
