#include "toricchi/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toricchi/error.hpp"

namespace toricchi {

Fan::Fan(int dim, std::vector<IntVector> rays, std::vector<IndexSet> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (dim_ < 1) throw MalformedInput("fan dimension must be positive");
  if (rays_.empty()) throw MalformedInput("fan has no rays");
  if (ray_count() > kMaxRays) {
    throw MalformedInput("fan has " + std::to_string(ray_count()) +
                         " rays; at most " + std::to_string(kMaxRays) + " are supported");
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (static_cast<int>(rays_[i].size()) != dim_) {
      throw MalformedInput("ray " + std::to_string(i + 1) + " has " +
                           std::to_string(rays_[i].size()) + " coordinates, expected " +
                           std::to_string(dim_));
    }
  }
  if (max_cones_.empty()) throw MalformedInput("fan has no maximal cones");
  const IndexSet all = IndexSet::full(ray_count());
  for (IndexSet cone : max_cones_) {
    if (!cone.is_subset_of(all)) throw MalformedInput("cone index out of range");
  }
}

Fan Fan::from_one_based(int dim, std::vector<IntVector> rays,
                        const std::vector<std::vector<int>>& max_cones) {
  const int d = static_cast<int>(rays.size());
  std::vector<IndexSet> cones;
  cones.reserve(max_cones.size());
  for (const auto& cone : max_cones) {
    IndexSet s;
    for (int idx : cone) {
      if (idx < 1 || idx > d) {
        throw MalformedInput("cone index " + std::to_string(idx) + " out of range 1.." +
                             std::to_string(d));
      }
      if (s.contains(idx - 1)) {
        throw MalformedInput("cone index " + std::to_string(idx) + " repeated");
      }
      s.insert(idx - 1);
    }
    cones.push_back(s);
  }
  return Fan(dim, std::move(rays), std::move(cones));
}

IntegerMatrix Fan::ray_matrix() const {
  return IntegerMatrix::from_rows(rays_, static_cast<std::size_t>(dim_));
}

void check_divisor_length(const Fan& fan, const WeilDivisor& divisor) {
  if (divisor.size() != fan.ray_count()) {
    throw MalformedInput("divisor has " + std::to_string(divisor.size()) +
                         " coefficients but the fan has " +
                         std::to_string(fan.ray_count()) + " rays");
  }
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonPrimitiveRay: return "non-primitive ray";
    case ViolationKind::DuplicateRay: return "duplicate ray";
    case ViolationKind::ConeNotFullDimensional: return "cone not full-dimensional";
    case ViolationKind::DependentCone: return "dependent cone generators";
    case ViolationKind::DuplicateCone: return "duplicate cone";
    case ViolationKind::UnusedRay: return "ray in no maximal cone";
    case ViolationKind::RidgeCondition: return "ridge condition violated";
    case ViolationKind::SphereHomology: return "sphere homology check failed";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

std::string cone_name(IndexSet cone) {
  return "{" + to_one_based_string(cone, ",") + "}";
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
  ValidationReport report;
  auto fail = [&](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  const int n = fan.dim();
  const int d = fan.ray_count();

  for (int i = 0; i < d; ++i) {
    std::int64_t g = 0;
    for (std::int64_t x : fan.ray(i)) g = std::gcd(g, x);
    if (g != 1) {
      fail(ViolationKind::NonPrimitiveRay,
           "ray " + std::to_string(i + 1) + " has coordinate gcd " + std::to_string(g));
    }
    for (int j = 0; j < i; ++j) {
      if (fan.ray(i) == fan.ray(j)) {
        fail(ViolationKind::DuplicateRay, "rays " + std::to_string(j + 1) + " and " +
                                              std::to_string(i + 1) + " are equal");
      }
    }
  }

  const IntegerMatrix a = fan.ray_matrix();
  std::vector<int> all_cols(n);
  std::iota(all_cols.begin(), all_cols.end(), 0);
  std::set<IndexSet> seen;
  IndexSet used;
  bool cones_pure = true;
  for (IndexSet cone : fan.max_cones()) {
    used = used | cone;
    if (!seen.insert(cone).second) {
      fail(ViolationKind::DuplicateCone, "cone " + cone_name(cone) + " listed twice");
    }
    if (cone.size() != n) {
      cones_pure = false;
      fail(ViolationKind::ConeNotFullDimensional,
           "cone " + cone_name(cone) + " has " + std::to_string(cone.size()) +
               " rays, expected " + std::to_string(n));
      continue;
    }
    if (determinant(a.select(cone.elements(), all_cols)) == 0) {
      fail(ViolationKind::DependentCone,
           "cone " + cone_name(cone) + " has linearly dependent generators");
    }
  }
  for (int i = 0; i < d; ++i) {
    if (!used.contains(i)) {
      fail(ViolationKind::UnusedRay,
           "ray " + std::to_string(i + 1) + " lies in no maximal cone");
    }
  }

  if (cones_pure) {
    std::map<IndexSet, int> ridge_count;
    for (IndexSet cone : seen) {
      for (int v : cone.elements()) ++ridge_count[cone.without(v)];
    }
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 2) {
        fail(ViolationKind::RidgeCondition,
             "ridge " + cone_name(ridge) + " lies in " + std::to_string(count) +
                 " maximal cones");
      }
    }

    const BettiVector betti = reduced_betti(face_complex(fan));
    bool sphere = betti[n - 1] == 1;
    for (int i = -1; i < n - 1; ++i) sphere = sphere && betti[i] == 0;
    if (!sphere) {
      fail(ViolationKind::SphereHomology,
           "face complex does not have the rational homology of an " +
               std::to_string(n - 1) + "-sphere");
    }
  }
  return report;
}

void require_valid(const Fan& fan) {
  const ValidationReport report = validate_fan(fan);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw InvalidFan(std::string(to_string(v.kind)) + ": " + v.message);
  }
}

FaceComplex face_complex(const Fan& fan) {
  return FaceComplex(fan.ray_count(), fan.max_cones());
}

bool is_face(const FaceComplex& complex, IndexSet subset) {
  if (!subset.is_subset_of(IndexSet::full(complex.vertex_count()))) {
    throw std::out_of_range("subset index out of range");
  }
  return complex.is_face(subset);
}

}  // namespace toricchi
