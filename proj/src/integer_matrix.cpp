#include "toricchi/integer_matrix.hpp"

#include <utility>

namespace toricchi {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = static_cast<long>(rows[r][c]);
    }
  }
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntegerMatrix IntegerMatrix::select(const std::vector<int>& row_idx,
                                    const std::vector<int>& col_idx) const {
  IntegerMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    for (std::size_t c = 0; c < col_idx.size(); ++c) {
      s(r, c) = (*this)(row_idx[r], col_idx[c]);
    }
  }
  return s;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& x) const {
  std::vector<Integer> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  }
  return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  for (std::size_t r = 0; r < m.rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << "]\n";
  }
  return os;
}

namespace {

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps and
// `last_pivot` ends as the determinant when the matrix is square and full rank.
std::size_t bareiss(IntegerMatrix& m, int& sign, Integer& last_pivot) {
  sign = 1;
  last_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / last_pivot;
      }
      m(i, c) = 0;
    }
    last_pivot = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(IntegerMatrix m) {
  int sign = 1;
  Integer pivot;
  return bareiss(m, sign, pivot);
}

Integer determinant(IntegerMatrix m) {
  if (m.rows() != m.cols()) return 0;
  if (m.rows() == 0) return 1;
  int sign = 1;
  Integer pivot;
  if (bareiss(m, sign, pivot) < m.rows()) return 0;
  return sign * pivot;
}

bool solve_rational(const IntegerMatrix& m, const std::vector<Integer>& b,
                    std::vector<Rational>& x) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n] = b[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug[pivot][c] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(aug[pivot], aug[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c] / aug[c][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  x.assign(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = aug[r][n] / aug[r][r];
    x[r].canonicalize();
  }
  return true;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace toricchi
