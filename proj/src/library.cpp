#include "toricchi/library.hpp"

#include <stdexcept>

namespace toricchi {

namespace {

BundledFan make(std::string name, std::string description, int dim,
                std::vector<IntVector> rays, std::vector<std::vector<int>> cones) {
  std::string file = name + ".fan";
  return {std::move(name), std::move(file), std::move(description),
          Fan::from_one_based(dim, std::move(rays), cones)};
}

std::vector<BundledFan> build_library() {
  std::vector<BundledFan> fans;
  fans.push_back(make("p2", "projective plane", 2, {{1, 0}, {0, 1}, {-1, -1}},
                      {{1, 2}, {2, 3}, {3, 1}}));
  fans.push_back(make("p1xp1", "product of two projective lines", 2,
                      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  for (int a = 1; a <= 3; ++a) {
    fans.push_back(make("hirzebruch" + std::to_string(a),
                        "Hirzebruch surface of degree " + std::to_string(a), 2,
                        {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
  }
  fans.push_back(make("p112", "weighted projective plane P(1,1,2)", 2,
                      {{1, 0}, {0, 1}, {-1, -2}}, {{1, 2}, {2, 3}, {3, 1}}));
  fans.push_back(make("fake_p2", "fake projective plane, class group Z + Z/3", 2,
                      {{1, 2}, {1, -1}, {-2, -1}}, {{1, 2}, {2, 3}, {3, 1}}));
  fans.push_back(make("p3", "projective 3-space", 3,
                      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
                      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  return fans;
}

}  // namespace

const std::vector<BundledFan>& bundled_fans() {
  static const std::vector<BundledFan> fans = build_library();
  return fans;
}

std::optional<BundledFan> find_bundled_fan(const std::string& key) {
  for (const auto& f : bundled_fans()) {
    if (f.name == key || f.file == key) return f;
  }
  return std::nullopt;
}

const Fan& bundled_fan(const std::string& name) {
  for (const auto& f : bundled_fans()) {
    if (f.name == name) return f.fan;
  }
  throw std::out_of_range("no bundled fan named '" + name + "'");
}

}  // namespace toricchi
