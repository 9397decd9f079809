#include "isotriv/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace isotriv::torus {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

std::vector<Rational> IntMatrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0) out[i] += Rational((*this)(i, j)) * v[j];
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& x : out.a_) x = -x;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  IntMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t p = r;
    while (p < rows_ && m(p, col) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m(i, col) == 0) continue;
      Integer a = m(r, col), b = m(i, col);
      Integer content = 0;
      for (std::size_t j = col; j < cols_; ++j) {
        m(i, j) = m(i, j) * a - m(r, j) * b;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m(i, j).get_mpz_t());
      }
      if (content > 1) {
        for (std::size_t j = col; j < cols_; ++j) mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), content.get_mpz_t());
      }
    }
    ++r;
  }
  return r;
}

std::optional<IntMatrix> IntMatrix::unimodular_inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  std::vector<Rational> m(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = (*this)(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && at(p, col) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != col) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(col, j));
    }
    const Rational inv = 1 / at(col, col);
    for (std::size_t j = 0; j < 2 * n; ++j) at(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || at(i, col) == 0) continue;
      const Rational f = at(i, col);
      for (std::size_t j = col; j < 2 * n; ++j) at(i, j) -= f * at(col, j);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = at(i, n + j);
      if (!is_integral(x)) return std::nullopt;
      out(i, j) = x.get_num();
    }
  }
  return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
  }
  return out;
}

IntMatrix IntMatrix::cols_range(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << (*this)(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    int c = cmp(a.a_[i], b.a_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
  }
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
  }
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) return s;
      swap_rows(D, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = tdiv(D(i, t), D(t, t));
        add_row_multiple(D, i, t, q);
        add_row_multiple(s.U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = tdiv(D(t, j), D(t, t));
        add_col_multiple(D, j, t, q);
        add_col_multiple(s.V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility d_t | every later entry.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      add_row_multiple(D, t, bad, Integer(-1));
      add_row_multiple(s.U, t, bad, Integer(-1));
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < m; ++j) s.U(t, j) = -s.U(t, j);
    }
    s.rank = t + 1;
  }
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m), 0};
  IntMatrix& H = h.H;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    while (true) {
      std::size_t p = m;
      for (std::size_t i = row; i < m; ++i) {
        if (H(i, col) != 0 && (p == m || mpz_cmpabs(H(i, col).get_mpz_t(), H(p, col).get_mpz_t()) < 0)) p = i;
      }
      if (p == m) break;
      swap_rows(H, row, p);
      swap_rows(h.U, row, p);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        Integer q = tdiv(H(i, col), H(row, col));
        add_row_multiple(H, i, row, q);
        add_row_multiple(h.U, i, row, q);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      for (std::size_t j = 0; j < n; ++j) H(row, j) = -H(row, j);
      for (std::size_t j = 0; j < m; ++j) h.U(row, j) = -h.U(row, j);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(row, col).get_mpz_t());
      if (q == 0) continue;
      add_row_multiple(H, i, row, q);
      add_row_multiple(h.U, i, row, q);
    }
    ++row;
  }
  h.rank = row;
  return h;
}

}  // namespace isotriv::torus
