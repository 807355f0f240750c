#include "toricchi/graded_dimension.hpp"

#include <algorithm>
#include <numeric>

#include "toricchi/error.hpp"

namespace toricchi {

namespace {

using Wide = __int128;

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

// x pushed into [lo - 1, hi + 1], which keeps the interval test intact.
std::int64_t clamp_to(std::int64_t lo, std::int64_t hi, Wide x) {
  if (x < Wide{lo} - 1) return lo - 1;
  if (x > Wide{hi} + 1) return hi + 1;
  return static_cast<std::int64_t>(x);
}

// Beyond these the scan would not finish in reasonable time, or the exact
// int64 arithmetic in the slice solver could overflow.
constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 40;
constexpr std::int64_t kMaxSlices = std::int64_t{1} << 30;

std::vector<int> iota_vector(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

template <typename Point>
bool satisfies(const std::vector<IntVector>& normals, const IntVector& lower_bounds,
               const Point& p) {
  using Scalar = typename Point::value_type;
  for (std::size_t r = 0; r < normals.size(); ++r) {
    Scalar lhs = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      lhs += static_cast<long>(normals[r][j]) * p[j];
    }
    if (lhs < static_cast<long>(lower_bounds[r])) return false;
  }
  return true;
}

}  // namespace

bool DivisorPolyhedron::contains(const std::vector<Rational>& point) const {
  return satisfies(normals, lower_bounds, point);
}

bool DivisorPolyhedron::contains(const IntVector& point) const {
  std::vector<Integer> p(point.begin(), point.end());
  return satisfies(normals, lower_bounds, p);
}

std::vector<std::vector<Rational>> arrangement_vertices(const Fan& fan,
                                                        const WeilDivisor& divisor) {
  check_divisor_length(fan, divisor);
  const int n = fan.dim();
  const IntegerMatrix a = fan.ray_matrix();
  const std::vector<int> cols = iota_vector(n);
  std::vector<std::vector<Rational>> out;
  for_each_k_subset(fan.ray_count(), n, [&](IndexSet rows) {
    const auto idx = rows.elements();
    std::vector<Integer> rhs;
    for (int r : idx) rhs.emplace_back(static_cast<long>(-divisor.coeffs[r]));
    std::vector<Rational> x;
    if (solve_rational(a.select(idx, cols), rhs, x) &&
        std::find(out.begin(), out.end(), x) == out.end()) {
      out.push_back(std::move(x));
    }
  });
  return out;
}

bool has_recession_direction(const Fan& fan) {
  const int n = fan.dim();
  const IntegerMatrix a = fan.ray_matrix();
  if (rank(a) < static_cast<std::size_t>(n)) return true;
  // An extreme ray of the pointed cone {A w ≥ 0} is cut out by n-1
  // independent tight rows; its direction is their generalized cross product.
  bool found = false;
  for_each_k_subset(fan.ray_count(), n - 1, [&](IndexSet rows) {
    if (found) return;
    const auto idx = rows.elements();
    std::vector<Integer> w(n);
    for (int j = 0; j < n; ++j) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c) {
        if (c != j) cols.push_back(c);
      }
      w[j] = determinant(a.select(idx, cols));
      if (j % 2 == 1) w[j] = -w[j];
    }
    if (std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; })) return;
    const std::vector<Integer> aw = a.apply(w);
    const bool forward = std::all_of(aw.begin(), aw.end(), [](const Integer& x) { return x >= 0; });
    const bool backward = std::all_of(aw.begin(), aw.end(), [](const Integer& x) { return x <= 0; });
    found = forward || backward;
  });
  return found;
}

DivisorPolyhedron divisor_polytope(const Fan& fan, const WeilDivisor& divisor) {
  check_divisor_length(fan, divisor);
  DivisorPolyhedron p;
  p.normals = fan.rays();
  p.lower_bounds.reserve(divisor.coeffs.size());
  for (std::int64_t c : divisor.coeffs) p.lower_bounds.push_back(-c);

  for (auto& v : arrangement_vertices(fan, divisor)) {
    if (p.contains(v)) p.vertices.push_back(std::move(v));
  }
  if (p.vertices.empty()) return p;
  if (has_recession_direction(fan)) {
    throw ComputationError("divisor polyhedron is unbounded; the fan is not complete");
  }

  const int n = fan.dim();
  p.box_min.resize(n);
  p.box_max.resize(n);
  for (int j = 0; j < n; ++j) {
    Integer lo = floor(p.vertices[0][j]);
    Integer hi = ceil(p.vertices[0][j]);
    for (const auto& v : p.vertices) {
      lo = std::min(lo, Integer(floor(v[j])));
      hi = std::max(hi, Integer(ceil(v[j])));
    }
    if (abs(lo) > kMaxCoordinate || abs(hi) > kMaxCoordinate) {
      throw ComputationError("divisor polytope is too large to enumerate");
    }
    p.box_min[j] = lo.get_si();
    p.box_max[j] = hi.get_si();
  }
  std::int64_t slices = 1;
  for (int j = 0; j + 1 < n; ++j) {
    slices *= p.box_max[j] - p.box_min[j] + 1;
    if (slices > kMaxSlices) throw ComputationError("divisor polytope is too large to enumerate");
  }
  return p;
}

std::int64_t count_lattice_points(const DivisorPolyhedron& p) {
  if (p.empty()) return 0;
  const int n = p.dim();
  const int last = n - 1;
  std::int64_t count = 0;
  IntVector prefix(p.box_min.begin(), p.box_min.begin() + last);
  while (true) {
    std::int64_t lo = p.box_min[last];
    std::int64_t hi = p.box_max[last];
    for (std::size_t r = 0; r < p.normals.size() && lo <= hi; ++r) {
      const IntVector& v = p.normals[r];
      Wide partial = 0;
      for (int j = 0; j < last; ++j) partial += Wide{v[j]} * prefix[j];
      const Wide need = Wide{p.lower_bounds[r]} - partial;  // v_last * x ≥ need
      if (v[last] > 0) {
        lo = std::max(lo, clamp_to(lo, hi, ceil_div(need, v[last])));
      } else if (v[last] < 0) {
        hi = std::min(hi, clamp_to(lo, hi, floor_div(need, v[last])));
      } else if (need > 0) {
        hi = lo - 1;
      }
    }
    if (hi >= lo && __builtin_add_overflow(count, hi - lo + 1, &count)) {
      throw ComputationError("lattice point count does not fit in 64 bits");
    }

    // Odometer over the first n-1 coordinates.
    int j = 0;
    while (j < last && prefix[j] == p.box_max[j]) {
      prefix[j] = p.box_min[j];
      ++j;
    }
    if (j == last) break;
    ++prefix[j];
  }
  return count;
}

std::int64_t dim_S(const Fan& fan, const WeilDivisor& divisor) {
  return count_lattice_points(divisor_polytope(fan, divisor));
}

}  // namespace toricchi
