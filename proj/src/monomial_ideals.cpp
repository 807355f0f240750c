#include "toricchi/monomial_ideals.hpp"

#include <algorithm>
#include <set>

#include "toricchi/error.hpp"

namespace toricchi {

namespace {

std::vector<IndexSet> minimal_elements(std::vector<IndexSet> sets) {
  std::sort(sets.begin(), sets.end(), support_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<IndexSet> out;
  for (IndexSet s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(),
                                       [s](IndexSet g) { return g.is_subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Berge-style branching: extend `partial` by each element of the first
// generator it misses.
void collect_transversals(const std::vector<IndexSet>& gens, IndexSet partial,
                          std::set<IndexSet>& found) {
  auto missed = std::find_if(gens.begin(), gens.end(),
                             [partial](IndexSet g) { return !g.intersects(partial); });
  if (missed == gens.end()) {
    found.insert(partial);
    return;
  }
  for (int v : missed->elements()) {
    const IndexSet next = partial.with(v);
    // Every element of a minimal transversal needs a private generator, one
    // it alone hits. Adding elements never restores privacy, so prune here.
    const auto elems = partial.elements();
    const bool minimal = std::all_of(elems.begin(), elems.end(), [&](int u) {
      const IndexSet others = next.without(u);
      return std::any_of(gens.begin(), gens.end(), [&](IndexSet g) {
        return g.contains(u) && !g.intersects(others);
      });
    });
    if (minimal) collect_transversals(gens, next, found);
  }
}

}  // namespace

SquarefreeIdeal::SquarefreeIdeal(int d, std::vector<IndexSet> generators) : d_(d) {
  if (d < 0 || d > IndexSet::kCapacity) throw MalformedInput("invalid ambient dimension");
  const IndexSet all = IndexSet::full(d);
  for (IndexSet g : generators) {
    if (!g.is_subset_of(all)) throw MalformedInput("generator index out of range");
  }
  gens_ = minimal_elements(std::move(generators));
}

bool SquarefreeIdeal::contains(IndexSet support) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [support](IndexSet g) { return g.is_subset_of(support); });
}

SimplicialComplex SquarefreeIdeal::stanley_reisner_complex() const {
  std::vector<IndexSet> faces;
  for_each_subset(IndexSet::full(d_), [&](IndexSet s) {
    if (!contains(s)) faces.push_back(s);
  });
  return SimplicialComplex(d_, std::move(faces));
}

FineWeight::FineWeight(int d, IndexSet support) : d_(d), support_(support) {
  if (!support.is_subset_of(IndexSet::full(d))) {
    throw MalformedInput("weight support out of range");
  }
}

FineWeight FineWeight::from_vector(const std::vector<int>& entries) {
  IndexSet s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 1) {
      s.insert(static_cast<int>(i));
    } else if (entries[i] != 0) {
      throw MalformedInput("fine weight entries must be 0 or 1");
    }
  }
  return {static_cast<int>(entries.size()), s};
}

std::vector<int> FineWeight::entries() const {
  std::vector<int> out(d_);
  for (int i = 0; i < d_; ++i) out[i] = support_.contains(i) ? 1 : 0;
  return out;
}

SquarefreeIdeal stanley_reisner(const Fan& fan) {
  const FaceComplex complex = face_complex(fan);
  const int d = fan.ray_count();
  // A minimal nonface is a face plus one vertex whose facets are all faces.
  std::vector<IndexSet> minimal_nonfaces;
  for (IndexSet face : complex.faces()) {
    for (int v = 0; v < d; ++v) {
      if (face.contains(v)) continue;
      const IndexSet candidate = face.with(v);
      if (complex.is_face(candidate)) continue;
      const auto elems = candidate.elements();
      const bool minimal = std::all_of(elems.begin(), elems.end(), [&](int u) {
        return complex.is_face(candidate.without(u));
      });
      if (minimal) minimal_nonfaces.push_back(candidate);
    }
  }
  return SquarefreeIdeal(d, std::move(minimal_nonfaces));
}

SquarefreeIdeal irrelevant_ideal(const Fan& fan) {
  const IndexSet all = IndexSet::full(fan.ray_count());
  std::vector<IndexSet> gens;
  gens.reserve(fan.max_cones().size());
  for (IndexSet cone : fan.max_cones()) gens.push_back(all - cone);
  return SquarefreeIdeal(fan.ray_count(), std::move(gens));
}

SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.ambient_dim() == 0) {
    throw MalformedInput("Alexander duality needs a nonempty ambient variable set");
  }
  std::set<IndexSet> found;
  collect_transversals(ideal.generators(), IndexSet{}, found);
  return SquarefreeIdeal(ideal.ambient_dim(), {found.begin(), found.end()});
}

int sr_dim(const FaceComplex& complex, const FineWeight& a) {
  return complex.is_face(a.support()) ? 1 : 0;
}

int sr_dim(const Fan& fan, const FineWeight& a) {
  return sr_dim(face_complex(fan), a);
}

std::int64_t tor_dim(const SquarefreeIdeal& ideal, int i, const FineWeight& a) {
  if (i < 0) throw MalformedInput("homological index must be nonnegative");
  if (a.ambient_dim() != ideal.ambient_dim()) {
    throw MalformedInput("weight length does not match the ideal");
  }
  if (ideal.contains(IndexSet{})) return 0;  // S/I = 0
  if (i == 0) return a.support().empty() ? 1 : 0;
  const int degree = a.degree() - i - 1;
  if (degree < -1) return 0;
  const SimplicialComplex restricted =
      ideal.stanley_reisner_complex().induced(a.support());
  return reduced_betti(restricted)[degree];
}

ChowPresentation chow_presentation(const Fan& fan) {
  ChowPresentation p{stanley_reisner(fan), {}};
  p.linear_forms.assign(fan.dim(), IntVector(fan.ray_count()));
  for (int rho = 0; rho < fan.ray_count(); ++rho) {
    for (int i = 0; i < fan.dim(); ++i) p.linear_forms[i][rho] = fan.ray(rho)[i];
  }
  return p;
}

}  // namespace toricchi
