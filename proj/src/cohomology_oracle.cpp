#include "toricchi/cohomology_oracle.hpp"

#include <algorithm>
#include <map>

#include "toricchi/error.hpp"
#include "toricchi/graded_dimension.hpp"
#include "toricchi/simplicial_homology.hpp"

namespace toricchi {

std::int64_t CohomologyVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0) ? h[i] : -h[i];
  return chi;
}

CohomologyVector cohomology_dims(const Fan& fan, const WeilDivisor& divisor,
                                 const OracleOptions& options) {
  check_divisor_length(fan, divisor);
  if (options.margin < 0) throw MalformedInput("margin must be nonnegative");
  const int n = fan.dim();
  const int d = fan.ray_count();

  const auto vertices = arrangement_vertices(fan, divisor);
  if (vertices.empty()) throw ComputationError("hyperplane arrangement has no vertices");
  IntVector lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Integer a = floor(vertices[0][j]);
    Integer b = ceil(vertices[0][j]);
    for (const auto& v : vertices) {
      a = std::min(a, Integer(floor(v[j])));
      b = std::max(b, Integer(ceil(v[j])));
    }
    lo[j] = a.get_si() - options.margin;
    hi[j] = b.get_si() + options.margin;
  }

  // The subcomplex depends only on N(m); count points per pattern first.
  std::map<IndexSet, std::int64_t> pattern_count;
  std::vector<std::pair<IntVector, IndexSet>> visited;
  IntVector m = lo;
  while (true) {
    IndexSet negative;
    for (int rho = 0; rho < d; ++rho) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += m[j] * fan.ray(rho)[j];
      if (pairing < -divisor.coeffs[rho]) negative.insert(rho);
    }
    ++pattern_count[negative];
    if (options.record_points) visited.emplace_back(m, negative);

    int j = 0;
    while (j < n && m[j] == hi[j]) {
      m[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++m[j];
  }

  const FaceComplex complex = face_complex(fan);
  std::map<IndexSet, std::vector<std::int64_t>> pattern_ranks;
  CohomologyVector out;
  out.h.assign(n + 1, 0);
  for (const auto& [pattern, count] : pattern_count) {
    const BettiVector betti = reduced_betti(complex.induced(pattern));
    std::vector<std::int64_t> ranks(n + 1);
    for (int i = 0; i <= n; ++i) {
      ranks[i] = betti[i - 1];
      out.h[i] += count * ranks[i];
    }
    pattern_ranks.emplace(pattern, std::move(ranks));
  }

  for (auto& [point, pattern] : visited) {
    const auto& ranks = pattern_ranks.at(pattern);
    if (std::any_of(ranks.begin(), ranks.end(), [](std::int64_t r) { return r != 0; })) {
      out.points.push_back({std::move(point), pattern, ranks});
    }
  }
  return out;
}

std::int64_t h0(const Fan& fan, const WeilDivisor& divisor) { return dim_S(fan, divisor); }

}  // namespace toricchi
