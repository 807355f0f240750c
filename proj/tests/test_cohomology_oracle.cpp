#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "toricchi/cohomology_oracle.hpp"
#include "toricchi/euler.hpp"
#include "toricchi/graded_dimension.hpp"
#include "toricchi/library.hpp"

using namespace toricchi;
using toricchi::testing::hirzebruch2;
using toricchi::testing::p2;

namespace {

using H = std::vector<std::int64_t>;

WeilDivisor serre_dual(const WeilDivisor& d) {
  WeilDivisor out = d;
  for (auto& c : out.coeffs) c = -1 - c;
  return out;
}

}  // namespace

TEST_CASE("cohomology goldens") {
  CHECK(cohomology_dims(hirzebruch2(), WeilDivisor{{0, 0, 3, -5}}).h == H{0, 2, 6});
  CHECK(cohomology_dims(p2(), WeilDivisor{{1, 0, 0}}).h == H{3, 0, 0});
  CHECK(cohomology_dims(p2(), WeilDivisor{{0, 0, 0}}).h == H{1, 0, 0});
  CHECK(cohomology_dims(p2(), WeilDivisor{{-1, 0, 0}}).h == H{0, 0, 0});
  CHECK(cohomology_dims(p2(), WeilDivisor{{-3, 0, 0}}).h == H{0, 0, 1});
  CHECK(dim_S(p2(), WeilDivisor{{2, -1, -1}}) == 1);
  CHECK(cohomology_dims(bundled_fan("p3"), WeilDivisor{{-4, 0, 0, 0}}).h == H{0, 0, 0, 1});
  // ℙ¹×ℙ¹, O(-2, 0): h^1 = 1.
  CHECK(cohomology_dims(bundled_fan("p1xp1"), WeilDivisor{{-2, 0, 0, 0}}).h == H{0, 1, 0});
}

TEST_CASE("recorded points") {
  OracleOptions opts;
  opts.record_points = true;
  const CohomologyVector v = cohomology_dims(hirzebruch2(), WeilDivisor{{0, 0, 3, -5}}, opts);
  H summed(3, 0);
  for (const auto& p : v.points) {
    REQUIRE(p.contributions.size() == 3);
    for (int i = 0; i < 3; ++i) summed[i] += p.contributions[i];
  }
  CHECK(summed == v.h);
  CHECK(v.euler_characteristic() == 4);
}

TEST_CASE("oracle agrees with dim_S, chi, Serre duality and a wider region") {
  std::mt19937_64 rng(31);
  for (const auto& b : bundled_fans()) {
    CAPTURE(b.name);
    const int n = b.fan.dim();
    for (int trial = 0; trial < 8; ++trial) {
      const WeilDivisor a = toricchi::testing::random_divisor(b.fan.ray_count(), 4, rng);
      CAPTURE(a.coeffs);
      const CohomologyVector v = cohomology_dims(b.fan, a);
      REQUIRE(v.h.size() == static_cast<std::size_t>(n + 1));
      CHECK(v.h[0] == h0(b.fan, a));
      CHECK(v.euler_characteristic() == chi(b.fan, a));

      OracleOptions wide;
      wide.margin = 3;
      CHECK(cohomology_dims(b.fan, a, wide).h == v.h);

      const CohomologyVector dual = cohomology_dims(b.fan, serre_dual(a));
      for (int i = 0; i <= n; ++i) CHECK(v.h[i] == dual.h[n - i]);
    }
  }
}
