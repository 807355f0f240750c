#include "doctest.h"

#include <map>

#include "test_support.hpp"
#include "toricchi/error.hpp"
#include "toricchi/fan.hpp"
#include "toricchi/library.hpp"

using namespace toricchi;
using toricchi::testing::hirzebruch2;

namespace {

Fan rebuild(const Fan& f, std::vector<IntVector> rays, std::vector<IndexSet> cones) {
  return Fan(f.dim(), std::move(rays), std::move(cones));
}

}  // namespace

TEST_CASE("validate_fan accepts the bundled library") {
  for (const auto& b : bundled_fans()) {
    CAPTURE(b.name);
    const ValidationReport r = validate_fan(b.fan);
    CHECK(r.ok());
  }
}

TEST_CASE("validate_fan rejects the documented failures") {
  SUBCASE("non-primitive ray") {
    const Fan f = Fan::from_one_based(2, {{2, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(validate_fan(f).has(ViolationKind::NonPrimitiveRay));
  }
  SUBCASE("ridge condition") {
    const Fan f = Fan::from_one_based(2, hirzebruch2().rays(), {{1, 2}, {2, 4}, {3, 4}, {4, 1}});
    const ValidationReport r = validate_fan(f);
    CHECK_FALSE(r.ok());
    CHECK(r.has(ViolationKind::RidgeCondition));
  }
  SUBCASE("duplicate ray") {
    const Fan f = Fan::from_one_based(2, {{1, 0}, {1, 0}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}});
    CHECK(validate_fan(f).has(ViolationKind::DuplicateRay));
  }
  SUBCASE("dependent cone") {
    const Fan f = Fan::from_one_based(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                                      {{1, 3}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(validate_fan(f).has(ViolationKind::DependentCone));
  }
  SUBCASE("lower-dimensional cone") {
    const Fan f = Fan::from_one_based(2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3}});
    CHECK(validate_fan(f).has(ViolationKind::ConeNotFullDimensional));
  }
  SUBCASE("unused ray") {
    const Fan f = Fan::from_one_based(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}},
                                      {{1, 2}, {2, 3}, {3, 1}});
    CHECK(validate_fan(f).has(ViolationKind::UnusedRay));
  }
  SUBCASE("pseudomanifold that is not a sphere") {
    // Two disjoint triangle boundaries satisfy the ridge condition but have
    // H̃_0 = 1 and H̃_1 = 2.
    const Fan f = Fan::from_one_based(
        2, {{1, 0}, {0, 1}, {-1, -1}, {1, 2}, {2, 1}, {-3, -2}},
        {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    const ValidationReport r = validate_fan(f);
    CHECK_FALSE(r.has(ViolationKind::RidgeCondition));
    CHECK(r.has(ViolationKind::SphereHomology));
  }
}

TEST_CASE("validate_fan rejects single-mutation corruptions of every library fan") {
  for (const auto& b : bundled_fans()) {
    CAPTURE(b.name);
    const Fan& f = b.fan;
    const int d = f.ray_count();

    for (int i = 0; i < d; ++i) {  // scale a ray
      auto rays = f.rays();
      for (auto& x : rays[i]) x *= 2;
      CHECK_FALSE(validate_fan(rebuild(f, rays, f.max_cones())).ok());
    }
    for (int i = 1; i < d; ++i) {  // copy ray 1 over ray i
      auto rays = f.rays();
      rays[i] = rays[0];
      CHECK_FALSE(validate_fan(rebuild(f, rays, f.max_cones())).ok());
    }
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {  // drop a cone
      auto cones = f.max_cones();
      cones.erase(cones.begin() + static_cast<std::ptrdiff_t>(c));
      CHECK_FALSE(validate_fan(rebuild(f, f.rays(), cones)).ok());
    }
    for (std::size_t c = 0; c < f.max_cones().size(); ++c) {  // swap one generator
      for (int v : f.max_cones()[c].elements()) {
        for (int w = 0; w < d; ++w) {
          if (f.max_cones()[c].contains(w)) continue;
          auto cones = f.max_cones();
          cones[c] = cones[c].without(v).with(w);
          CHECK_FALSE(validate_fan(rebuild(f, f.rays(), cones)).ok());
        }
      }
    }
  }
}

TEST_CASE("ridge incidences are twice the ridge count") {
  for (const auto& b : bundled_fans()) {
    std::map<IndexSet, int> ridges;
    int incidences = 0;
    for (IndexSet cone : b.fan.max_cones()) {
      for (int v : cone.elements()) {
        ++ridges[cone.without(v)];
        ++incidences;
      }
    }
    CHECK(incidences == 2 * static_cast<int>(ridges.size()));
  }
}

TEST_CASE("face_complex") {
  SUBCASE("ℋ₂") {
    const FaceComplex c = face_complex(hirzebruch2());
    const std::vector<IndexSet> expected{IndexSet{},     IndexSet{0},    IndexSet{1},
                                         IndexSet{2},    IndexSet{3},    IndexSet{0, 1},
                                         IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{0, 3}};
    auto faces = c.faces();
    std::sort(faces.begin(), faces.end());
    auto sorted_expected = expected;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    CHECK(faces == sorted_expected);
  }
  SUBCASE("single cone gives the whole power set") {
    const Fan f = Fan::from_one_based(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 2, 3}});
    CHECK(face_complex(f).faces().size() == 8);
  }
  SUBCASE("ℙ² is the triangle boundary") {
    const FaceComplex c = face_complex(bundled_fan("p2"));
    CHECK(c.faces().size() == 7);
    CHECK_FALSE(c.is_face(IndexSet{0, 1, 2}));
  }
  SUBCASE("faces are closed under subsets") {
    for (const auto& b : bundled_fans()) {
      const FaceComplex c = face_complex(b.fan);
      for (IndexSet face : c.faces()) {
        for_each_subset(face, [&](IndexSet sub) { CHECK(c.is_face(sub)); });
      }
    }
  }
}

TEST_CASE("is_face") {
  const FaceComplex c = face_complex(hirzebruch2());
  CHECK_FALSE(is_face(c, IndexSet{0, 2}));
  CHECK(is_face(c, IndexSet{}));
  CHECK(is_face(c, IndexSet{2, 3}));
  CHECK_THROWS_AS(is_face(c, IndexSet{4}), std::out_of_range);
}

TEST_CASE("Fan shape errors are malformed input") {
  CHECK_THROWS_AS(Fan::from_one_based(2, {{1, 0}, {0}}, {{1, 2}}), MalformedInput);
  CHECK_THROWS_AS(Fan::from_one_based(2, {{1, 0}, {0, 1}}, {{1, 3}}), MalformedInput);
  CHECK_THROWS_AS(Fan::from_one_based(2, {{1, 0}, {0, 1}}, {{1, 1}}), MalformedInput);
  CHECK_THROWS_AS(Fan::from_one_based(0, {}, {}), MalformedInput);
  CHECK_THROWS_AS(Fan::from_one_based(2, {{1, 0}, {0, 1}}, {}), MalformedInput);
}

TEST_CASE("require_valid throws InvalidFan") {
  const Fan bad = Fan::from_one_based(2, {{2, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(require_valid(bad), InvalidFan);
  CHECK_NOTHROW(require_valid(hirzebruch2()));
}
