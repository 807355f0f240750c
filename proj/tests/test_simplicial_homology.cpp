#include "doctest.h"

#include <random>

#include "toricchi/simplicial_homology.hpp"

using namespace toricchi;

namespace {

// Boundary of the square on vertices 0..3 (the face complex of ℋ₂).
SimplicialComplex square() {
  return SimplicialComplex(4, {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
}

SimplicialComplex random_complex(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << d) - 1);
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<IndexSet> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) gens.emplace_back(mask(rng));
  return SimplicialComplex(d, gens);
}

}  // namespace

TEST_CASE("reduced_betti on small complexes") {
  SUBCASE("boundary of a square is a circle") {
    const BettiVector b = reduced_betti(square());
    CHECK(b[-1] == 0);
    CHECK(b[0] == 0);
    CHECK(b[1] == 1);
  }
  SUBCASE("single vertex is acyclic") {
    const BettiVector b = reduced_betti(SimplicialComplex(1, {IndexSet{0}}));
    for (int i = -1; i <= 1; ++i) CHECK(b[i] == 0);
  }
  SUBCASE("two disjoint vertices") {
    const BettiVector b = reduced_betti(SimplicialComplex(2, {IndexSet{0}, IndexSet{1}}));
    CHECK(b[-1] == 0);
    CHECK(b[0] == 1);
  }
  SUBCASE("empty complex has H̃_{-1} = 1") {
    const BettiVector b = reduced_betti(SimplicialComplex::empty_complex(3));
    CHECK(b[-1] == 1);
    CHECK(b[0] == 0);
  }
  SUBCASE("void complex has nothing") {
    const BettiVector b = reduced_betti(SimplicialComplex::void_complex(3));
    CHECK(b.ranks().empty());
    CHECK(b[-1] == 0);
  }
  SUBCASE("boundary of the 3-simplex is a 2-sphere") {
    const SimplicialComplex s(4, {IndexSet{0, 1, 2}, IndexSet{0, 1, 3}, IndexSet{0, 2, 3},
                                  IndexSet{1, 2, 3}});
    const BettiVector b = reduced_betti(s);
    CHECK(b[0] == 0);
    CHECK(b[1] == 0);
    CHECK(b[2] == 1);
  }
  SUBCASE("full simplex is acyclic") {
    const BettiVector b = reduced_betti(SimplicialComplex(3, {IndexSet{0, 1, 2}}));
    for (int i = -1; i <= 2; ++i) CHECK(b[i] == 0);
  }
  SUBCASE("two triangles sharing no edge form two circles' wedge") {
    // Hollow triangles 012 and 234 glued at vertex 2: H̃_1 has rank 2.
    const SimplicialComplex s(5, {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{0, 2}, IndexSet{2, 3},
                                  IndexSet{3, 4}, IndexSet{2, 4}});
    const BettiVector b = reduced_betti(s);
    CHECK(b[0] == 0);
    CHECK(b[1] == 2);
  }
}

TEST_CASE("induced_subcomplex") {
  const SimplicialComplex sq = square();
  CHECK(sq.induced(IndexSet::full(4)) == sq);

  const SimplicialComplex opposite = sq.induced(IndexSet{0, 2});
  CHECK(opposite.facets() == std::vector<IndexSet>{IndexSet{0}, IndexSet{2}});
  CHECK(reduced_betti(opposite)[0] == 1);

  const SimplicialComplex nothing = sq.induced(IndexSet{});
  CHECK(nothing == SimplicialComplex::empty_complex(4));
  CHECK(SimplicialComplex::void_complex(4).induced(IndexSet{0}).is_void());
}

TEST_CASE("facets are kept as an antichain") {
  const SimplicialComplex s(3, {IndexSet{0}, IndexSet{0, 1}, IndexSet{0, 1}, IndexSet{2}});
  CHECK(s.facets() == std::vector<IndexSet>{IndexSet{2}, IndexSet{0, 1}});
  CHECK(s.faces().size() == 5);  // ∅, 0, 1, 2, 01
  CHECK(s.is_face(IndexSet{}));
  CHECK_FALSE(s.is_face(IndexSet{1, 2}));
}

TEST_CASE("Betti alternating sum equals the reduced Euler characteristic") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const SimplicialComplex c = random_complex(6, rng);
    const BettiVector b = reduced_betti(c);
    CHECK(b.euler_characteristic() == reduced_euler_characteristic(c));
    CHECK(reduced_betti(c.induced(IndexSet::full(6))) == b);
  }
}
