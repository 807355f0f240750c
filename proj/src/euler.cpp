#include "toricchi/euler.hpp"

#include <algorithm>
#include <cstdlib>

#include "toricchi/error.hpp"
#include "toricchi/graded_dimension.hpp"

namespace toricchi {

namespace {

std::vector<std::vector<int>> k_subsets(int count, int k) {
  std::vector<std::vector<int>> out;
  for_each_k_subset(count, k, [&](IndexSet s) { out.push_back(s.elements()); });
  return out;
}

std::int64_t resolve_l(const Fan& fan, const WeilDivisor& divisor,
                       std::optional<std::int64_t> l) {
  check_divisor_length(fan, divisor);
  if (!l) return ems_bound(fan, divisor).l_min;
  if (*l < 1) throw MalformedInput("l must be a positive integer");
  return *l;
}

int sign_of(const FineWeight& m, const Fan& fan) {
  const int exponent = m.degree() - fan.ray_count() + fan.dim();
  return (std::abs(exponent) % 2 == 0) ? 1 : -1;
}

IntVector shifted_degree(const WeilDivisor& divisor, const FineWeight& m, std::int64_t l) {
  IntVector degree = divisor.coeffs;
  for (int rho : m.support().elements()) degree[rho] += l;
  return degree;
}

}  // namespace

ExponentBound ems_bound(const Fan& fan, const WeilDivisor& divisor) {
  check_divisor_length(fan, divisor);
  const IntegerMatrix a = fan.ray_matrix();
  const int n = fan.dim();
  const int d = fan.ray_count();

  ExponentBound bound;
  bound.a = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) bound.a = std::max(bound.a, Integer(abs(a(r, c))));
  }

  bound.b = 0;
  const auto minor_cols = k_subsets(n, n - 1);
  for (const auto& rows : k_subsets(d, n - 1)) {
    for (const auto& cols : minor_cols) {
      bound.b = std::max(bound.b, Integer(abs(determinant(a.select(rows, cols)))));
    }
  }

  bool have_c = false;
  const std::vector<int> all_cols = k_subsets(n, n).front();
  for (const auto& rows : k_subsets(d, n)) {
    const Integer minor = abs(determinant(a.select(rows, all_cols)));
    if (minor == 0) continue;
    if (!have_c || minor < bound.c) bound.c = minor;
    have_c = true;
  }
  if (!have_c) throw ComputationError("all maximal minors of the ray matrix vanish");

  std::int64_t max_coeff = 0;
  for (std::int64_t x : divisor.coeffs) max_coeff = std::max(max_coeff, std::abs(x));

  const Integer numerator = Integer(n) * n * Integer(static_cast<long>(max_coeff)) *
                            bound.a * bound.b;
  Integer l;
  mpz_cdiv_q(l.get_mpz_t(), numerator.get_mpz_t(), bound.c.get_mpz_t());
  if (l < 1) l = 1;
  if (!l.fits_slong_p()) throw ComputationError("exponent bound does not fit in 64 bits");
  bound.l_min = l.get_si();
  return bound;
}

std::int64_t chi(const Fan& fan, const WeilDivisor& divisor, std::optional<std::int64_t> l) {
  const std::int64_t exponent = resolve_l(fan, divisor, l);
  const FaceComplex complex = face_complex(fan);
  const int d = fan.ray_count();
  std::int64_t total = 0;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << d); ++bits) {
    const FineWeight m(d, IndexSet(bits));
    // The face indicator is cheap and zero for most weights; test it first.
    if (sr_dim(complex, m.complement()) == 0) continue;
    total += sign_of(m, fan) *
             dim_S(fan, WeilDivisor{shifted_degree(divisor, m, exponent)});
  }
  return total;
}

ChiTrace chi_trace(const Fan& fan, const WeilDivisor& divisor, std::optional<std::int64_t> l) {
  ChiTrace trace;
  trace.l = resolve_l(fan, divisor, l);
  const FaceComplex complex = face_complex(fan);
  const int d = fan.ray_count();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << d); ++bits) {
    const FineWeight m(d, IndexSet(bits));
    ChiTraceRow row{m, sr_dim(complex, m.complement()), shifted_degree(divisor, m, trace.l),
                    0, sign_of(m, fan), 0};
    row.dim_s = dim_S(fan, WeilDivisor{row.degree});
    row.contribution = row.sign * row.face_indicator * row.dim_s;
    trace.total += row.contribution;
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

}  // namespace toricchi
