#include "toricchi/class_group.hpp"

#include <algorithm>
#include <utility>

#include "toricchi/error.hpp"

namespace toricchi {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Row and column operations on the working matrix, mirrored into U, U^{-1}
// and V so that U · A · V equals the working matrix at all times.
class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : m_(a),
        u_(IntegerMatrix::identity(a.rows())),
        u_inv_(IntegerMatrix::identity(a.rows())),
        v_(IntegerMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(m_.rows(), m_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_position(t)) break;
      if (m_(t, t) < 0) negate_row(t);
    }
    SmithForm out{u_, u_inv_, m_, v_, {}};
    for (std::size_t t = 0; t < steps && m_(t, t) != 0; ++t) {
      out.invariant_factors.push_back(m_(t, t));
    }
    return out;
  }

 private:
  // Clears row and column t outside the diagonal, leaving a pivot that
  // divides the remaining block. Returns false if the block is zero.
  bool reduce_position(std::size_t t) {
    while (true) {
      std::size_t pr = 0, pc = 0;
      if (!find_min_entry(t, pr, pc)) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (m_(i, t) == 0) continue;
        add_row_multiple(i, t, -floor_div(m_(i, t), m_(t, t)));
        if (m_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (m_(t, j) == 0) continue;
        add_col_multiple(j, t, -floor_div(m_(t, j), m_(t, t)));
        if (m_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_rest = true;
      for (std::size_t i = t + 1; i < m_.rows() && divides_rest; ++i) {
        for (std::size_t j = t + 1; j < m_.cols(); ++j) {
          if (mpz_divisible_p(m_(i, j).get_mpz_t(), m_(t, t).get_mpz_t()) == 0) {
            add_row_multiple(t, i, 1);
            divides_rest = false;
            break;
          }
        }
      }
      if (divides_rest) return true;
    }
  }

  bool find_min_entry(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m_.rows(); ++i) {
      for (std::size_t j = t; j < m_.cols(); ++j) {
        if (m_(i, j) == 0) continue;
        const Integer mag = abs(m_(i, j));
        if (!found || mag < best) {
          best = mag;
          pr = i;
          pc = j;
          found = true;
        }
      }
    }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    m_.swap_rows(a, b);
    u_.swap_rows(a, b);
    u_inv_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    m_.swap_cols(a, b);
    v_.swap_cols(a, b);
  }
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    m_.add_row_multiple(dst, src, f);
    u_.add_row_multiple(dst, src, f);
    u_inv_.add_col_multiple(src, dst, -f);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    m_.add_col_multiple(dst, src, f);
    v_.add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t r) {
    m_.negate_row(r);
    u_.negate_row(r);
    u_inv_.negate_col(r);
  }

  IntegerMatrix m_;
  IntegerMatrix u_;
  IntegerMatrix u_inv_;
  IntegerMatrix v_;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

bool DivisorClass::is_zero() const {
  auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

ClassGroupPresentation::ClassGroupPresentation(const IntegerMatrix& ray_matrix)
    : a_(ray_matrix), snf_(smith_normal_form(ray_matrix)) {
  for (std::size_t k = 0; k < snf_.invariant_factors.size(); ++k) {
    if (snf_.invariant_factors[k] > 1) torsion_rows_.push_back(k);
  }
}

std::vector<Integer> ClassGroupPresentation::torsion_orders() const {
  std::vector<Integer> out;
  for (std::size_t k : torsion_rows_) out.push_back(snf_.invariant_factors[k]);
  return out;
}

DivisorClass ClassGroupPresentation::reduce(std::vector<Integer> torsion,
                                            std::vector<Integer> free) const {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    torsion[i] = mod_nonneg(torsion[i], snf_.invariant_factors[torsion_rows_[i]]);
  }
  return {std::move(torsion), std::move(free)};
}

DivisorClass ClassGroupPresentation::class_of(const std::vector<Integer>& a) const {
  if (a.size() != ray_count()) {
    throw MalformedInput("vector has " + std::to_string(a.size()) +
                         " entries but the class group has " +
                         std::to_string(ray_count()) + " generators");
  }
  const std::vector<Integer> y = snf_.u.apply(a);
  std::vector<Integer> torsion;
  for (std::size_t k : torsion_rows_) torsion.push_back(y[k]);
  std::vector<Integer> free(y.begin() + static_cast<std::ptrdiff_t>(rank()), y.end());
  return reduce(std::move(torsion), std::move(free));
}

DivisorClass ClassGroupPresentation::class_of(const WeilDivisor& divisor) const {
  std::vector<Integer> a;
  a.reserve(divisor.coeffs.size());
  for (std::int64_t x : divisor.coeffs) a.emplace_back(static_cast<long>(x));
  return class_of(a);
}

std::vector<Integer> ClassGroupPresentation::representative(const DivisorClass& c) const {
  if (c.torsion.size() != torsion_rows_.size() || c.free.size() != free_rank()) {
    throw MalformedInput("divisor class has the wrong shape for this class group");
  }
  std::vector<Integer> y(ray_count());
  for (std::size_t i = 0; i < torsion_rows_.size(); ++i) {
    const Integer& order = snf_.invariant_factors[torsion_rows_[i]];
    if (c.torsion[i] < 0 || c.torsion[i] >= order) {
      throw MalformedInput("torsion residue out of range");
    }
    y[torsion_rows_[i]] = c.torsion[i];
  }
  for (std::size_t i = 0; i < c.free.size(); ++i) y[rank() + i] = c.free[i];
  return snf_.u_inverse.apply(y);
}

DivisorClass ClassGroupPresentation::add(const DivisorClass& x,
                                         const DivisorClass& y) const {
  std::vector<Integer> torsion(x.torsion.size()), free(x.free.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = x.torsion[i] + y.torsion[i];
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = x.free[i] + y.free[i];
  return reduce(std::move(torsion), std::move(free));
}

DivisorClass ClassGroupPresentation::negate(const DivisorClass& x) const {
  return scale(-1, x);
}

DivisorClass ClassGroupPresentation::scale(const Integer& k, const DivisorClass& x) const {
  std::vector<Integer> torsion(x.torsion.size()), free(x.free.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = k * x.torsion[i];
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = k * x.free[i];
  return reduce(std::move(torsion), std::move(free));
}

ClassGroupPresentation class_group(const Fan& fan) {
  return ClassGroupPresentation(fan.ray_matrix());
}

}  // namespace toricchi
