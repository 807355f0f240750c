#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "toricchi/class_group.hpp"
#include "toricchi/error.hpp"
#include "toricchi/library.hpp"

using namespace toricchi;
using toricchi::testing::hirzebruch2;

namespace {

std::vector<std::vector<int>> k_subsets_of(int count, int k) {
  std::vector<std::vector<int>> out;
  for_each_k_subset(count, k, [&](IndexSet s) { out.push_back(s.elements()); });
  return out;
}

// d_1 ⋯ d_k = gcd of all k×k minors.
std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& a) {
  std::vector<Integer> out;
  Integer previous = 1;
  const int limit = static_cast<int>(std::min(a.rows(), a.cols()));
  for (int k = 1; k <= limit; ++k) {
    Integer g = 0;
    for (const auto& rows : k_subsets_of(static_cast<int>(a.rows()), k)) {
      for (const auto& cols : k_subsets_of(static_cast<int>(a.cols()), k)) {
        const Integer det = determinant(a.select(rows, cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

IntegerMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(-6, 6);
  IntegerMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<long>(dist(rng));
  return m;
}

void check_smith(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(s.u * s.u_inverse == IntegerMatrix::identity(a.rows()));
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c)
      if (r != c) CHECK(s.d(r, c) == 0);
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    CHECK(s.invariant_factors[i] > 0);
    CHECK(s.d(i, i) == s.invariant_factors[i]);
    if (i + 1 < s.invariant_factors.size())
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
  }
  CHECK(s.invariant_factors == invariant_factors_by_minors(a));
}

}  // namespace

TEST_CASE("smith_normal_form on fixed matrices") {
  check_smith(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3));
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3))
            .invariant_factors == std::vector<Integer>{2, 6, 12});
  check_smith(IntegerMatrix::from_rows({{0, 0}, {0, 0}}, 2));
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{0, 0}, {0, 0}}, 2)).invariant_factors.empty());
  check_smith(IntegerMatrix::from_rows({{1, 2}, {-2, -1}, {1, -1}}, 2));
  CHECK(smith_normal_form(IntegerMatrix::from_rows({{1, 2}, {-2, -1}, {1, -1}}, 2))
            .invariant_factors == std::vector<Integer>{1, 3});
}

TEST_CASE("smith_normal_form on random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + trial % 5;
    const int cols = 1 + (trial / 5) % 4;
    check_smith(random_matrix(rows, cols, rng));
  }
}

TEST_CASE("class groups of the library fans") {
  CHECK(class_group(hirzebruch2()).free_rank() == 2);
  CHECK(class_group(hirzebruch2()).torsion_orders().empty());
  CHECK(class_group(bundled_fan("p2")).free_rank() == 1);
  CHECK(class_group(bundled_fan("p3")).free_rank() == 1);
  CHECK(class_group(bundled_fan("p112")).torsion_orders().empty());
  const ClassGroupPresentation fake = class_group(bundled_fan("fake_p2"));
  CHECK(fake.free_rank() == 1);
  CHECK(fake.torsion_orders() == std::vector<Integer>{3});
}

TEST_CASE("class_of on ℋ₂") {
  const ClassGroupPresentation g = class_group(hirzebruch2());
  CHECK(g.class_of(WeilDivisor{{1, 0, 0, 0}}) == g.class_of(WeilDivisor{{0, 0, 1, 0}}));
  CHECK(g.class_of(WeilDivisor{{0, 1, 0, 1}}) == g.class_of(WeilDivisor{{-2, 0, 0, 2}}));
  CHECK(g.class_of(WeilDivisor{{0, 1, 0, 0}}) == g.class_of(WeilDivisor{{0, 0, -2, 1}}));
  CHECK_FALSE(g.class_of(WeilDivisor{{1, 0, 0, 0}}) == g.class_of(WeilDivisor{{0, 1, 0, 0}}));
  CHECK_THROWS_AS(g.class_of(WeilDivisor{{1, 0, 0}}), MalformedInput);
}

TEST_CASE("principal divisors have trivial class") {
  std::mt19937_64 rng(11);
  for (const auto& b : bundled_fans()) {
    CAPTURE(b.name);
    const ClassGroupPresentation g = class_group(b.fan);
    const WeilDivisor zero{IntVector(b.fan.ray_count(), 0)};
    for (int trial = 0; trial < 100; ++trial) {
      const IntVector m = toricchi::testing::random_vector(b.fan.dim(), 20, rng);
      CHECK(g.class_of(toricchi::testing::add_principal(b.fan, zero, m)).is_zero());
    }
  }
}

TEST_CASE("representative, addition and scaling") {
  std::mt19937_64 rng(13);
  for (const auto& b : bundled_fans()) {
    CAPTURE(b.name);
    const ClassGroupPresentation g = class_group(b.fan);
    const int d = b.fan.ray_count();
    for (int trial = 0; trial < 50; ++trial) {
      const WeilDivisor x = toricchi::testing::random_divisor(d, 7, rng);
      const WeilDivisor y = toricchi::testing::random_divisor(d, 7, rng);
      const DivisorClass cx = g.class_of(x);
      const DivisorClass cy = g.class_of(y);
      CHECK(g.class_of(g.representative(cx)) == cx);

      WeilDivisor sum = x;
      for (int i = 0; i < d; ++i) sum.coeffs[i] += y.coeffs[i];
      CHECK(g.class_of(sum) == g.add(cx, cy));
      CHECK(g.add(cx, g.negate(cx)).is_zero());

      WeilDivisor triple = x;
      for (auto& c : triple.coeffs) c *= 3;
      CHECK(g.class_of(triple) == g.scale(3, cx));
    }
  }
}

TEST_CASE("the fake projective plane has a class of order 3") {
  const Fan& f = bundled_fan("fake_p2");
  const ClassGroupPresentation g = class_group(f);
  // D_1 - D_2 has degree 0 but is not principal.
  const DivisorClass t = g.class_of(WeilDivisor{{1, -1, 0}});
  CHECK_FALSE(t.is_zero());
  CHECK(t.free == std::vector<Integer>{0});
  CHECK_FALSE(g.scale(2, t).is_zero());
  CHECK(g.scale(3, t).is_zero());
  CHECK(g.class_of(WeilDivisor{{3, -3, 0}}).is_zero());
  CHECK_FALSE(g.class_of(WeilDivisor{{1, 0, 0}}) == g.class_of(WeilDivisor{{0, 1, 0}}));
}
