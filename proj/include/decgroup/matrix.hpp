#ifndef DECGROUP_MATRIX_HPP
#define DECGROUP_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "univariate.hpp"

namespace decgroup {

inline bool is_zero_element(const Rational& q) { return is_zero(q); }
inline bool is_zero_element(const Polynomial& p) { return p.is_zero(); }

/// Dense row-major matrix over a commutative ring. The zero element is kept
/// so that rings without a global zero (polynomials carry their ring) work.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c, zero);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const T& zero() const noexcept { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  T trace() const {
    T s = zero_;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s = s + (*this)(i, i);
    return s;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArityMismatch("matrix dimensions do not match");
    Matrix r(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero_element(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero_element(bkj)) continue;
          r(i, j) = r(i, j) + aik * bkj;
        }
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r(a);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!is_zero_element(x)) return false;
    return true;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ArityMismatch("matrix dimensions do not match");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

inline RatMatrix rat_matrix(const std::vector<std::vector<Rational>>& rows) {
  return RatMatrix::from_rows(rows, Rational(0));
}

inline RatMatrix rat_identity(std::size_t n) { return RatMatrix::identity(n, Rational(0), Rational(1)); }

inline RatMatrix scaled(const RatMatrix& m, const Rational& c) {
  RatMatrix r(m);
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
  return r;
}

inline std::vector<Rational> mul_vec(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(v[j])) r[i] += m(i, j) * v[j];
  return r;
}

/// Matrix inverse by Gauss-Jordan elimination; throws for singular input.
inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw ArityMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(m);
  RatMatrix inv = rat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    const Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a(i, col))) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// p(M) by Horner's rule.
inline RatMatrix evaluate_at(const Dense& p, const RatMatrix& m) {
  if (!m.is_square()) throw ArityMismatch("polynomial evaluated at a non-square matrix");
  RatMatrix acc(m.rows(), m.cols(), Rational(0));
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * m + scaled(rat_identity(m.rows()), p[k]);
  return acc;
}

/// Coefficients c_0..c_N of det(lambda*Id - A) by the Faddeev-LeVerrier
/// recurrence. Valid over any commutative ring containing the rationals:
///   M_k = A*M_{k-1} + c_{N-k+1}*Id,  c_{N-k} = -tr(A*M_k)/k.
template <class T>
std::vector<T> faddeev_leverrier(const Matrix<T>& a, const T& one) {
  if (!a.is_square()) throw ArityMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1, a.zero());
  c[n] = one;
  Matrix<T> am(n, n, a.zero());  // A * M_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> mk = am;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k + 1];
    am = a * mk;
    c[n - k] = am.trace() * (Rational(-1) / static_cast<unsigned long>(k));
  }
  return c;
}

inline Dense char_poly_dense(const RatMatrix& m) {
  auto c = faddeev_leverrier(m, Rational(1));
  dense::trim(c);
  return c;
}

/// The ring K[lambda] that univariate characteristic and minimal polynomials live in.
inline const RingPtr& lambda_ring() {
  static const RingPtr ring = make_ring({"lambda"}, OrderKind::lex);
  return ring;
}

/// det(lambda*Id - M), monic of degree N, as a polynomial in lambda_ring().
inline Polynomial char_poly_rat(const RatMatrix& m) {
  return from_dense(lambda_ring(), 0, char_poly_dense(m));
}

/// Ring of the symbolic characteristic polynomials: tag variables t1..tn
/// followed by lambda, with lambda the most significant variable under lex.
inline RingPtr symbolic_ring(std::size_t tag_count) {
  std::vector<std::string> names;
  std::vector<std::size_t> ranking{tag_count};
  for (std::size_t i = 0; i < tag_count; ++i) {
    names.push_back("t" + std::to_string(i + 1));
    ranking.push_back(i);
  }
  names.push_back("lambda");
  return make_ring(std::move(names), MonomialOrder(OrderKind::lex, std::move(ranking)));
}

inline constexpr std::size_t kDefaultSymbolicCutoff = 16;

/// det(lambda*Id - sum_i t_i*M_i) over Q[t_1..t_n, lambda].
///
/// `tagged` pairs a 0-based variable index i with M_i. The result lives in
/// symbolic_ring(tag_count); lambda is variable index tag_count.
inline Polynomial char_poly_sym(const std::vector<std::pair<std::size_t, RatMatrix>>& tagged,
                                std::size_t tag_count, std::size_t cutoff = kDefaultSymbolicCutoff) {
  if (tagged.empty()) throw std::invalid_argument("symbolic characteristic polynomial of an empty matrix list");
  const std::size_t n = tagged.front().second.rows();
  for (const auto& [idx, m] : tagged) {
    if (!m.is_square() || m.rows() != n) throw ArityMismatch("matrices differ in dimension");
    if (idx >= tag_count) throw ArityMismatch("tag index out of range");
  }
  if (n > cutoff)
    throw CutoffExceeded("matrix dimension " + std::to_string(n) + " exceeds symbolic cutoff " +
                         std::to_string(cutoff));
  const RingPtr ring = symbolic_ring(tag_count);
  const Polynomial zero(ring);
  const Polynomial one = Polynomial::constant(ring, Rational(1));
  PolyMatrix a(n, n, zero);
  for (const auto& [idx, m] : tagged) {
    const Polynomial t = Polynomial::variable(ring, idx);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(m(i, j))) a(i, j) += t * m(i, j);
  }
  const auto c = faddeev_leverrier(a, one);
  Polynomial f(ring);
  for (std::size_t k = 0; k <= n; ++k)
    f += c[k].mul_term(Monomial::variable(ring->arity(), tag_count, static_cast<Monomial::Exponent>(k)),
                       Rational(1));
  return f;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return exact_divide(a, b); }

/// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T determinant_bareiss(Matrix<T> m, const T& one) {
  if (!m.is_square()) throw ArityMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero_element(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero_element(m(r, k))) ++r;
      if (r == n) return m.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = m.zero();
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = det * Rational(-1);
  return det;
}

/// Minimal polynomial: lcm over standard basis vectors of their Krylov
/// annihilators, each found by incremental Gaussian elimination.
inline Dense min_poly_dense(const RatMatrix& m) {
  if (!m.is_square()) throw ArityMismatch("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Dense result{Rational(1)};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = 1;
    // Skip vectors the current lcm already annihilates.
    {
      std::vector<Rational> acc(n);
      for (std::size_t k = result.size(); k-- > 0;) {
        acc = mul_vec(m, acc);
        acc[j] += result[k];
      }
      bool zero = true;
      for (const auto& x : acc) zero = zero && is_zero(x);
      if (zero) continue;
    }
    struct Row {
      std::vector<Rational> vec;
      Dense comb;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Rational> v = e;
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<Rational> r = v;
      Dense comb(k + 1);
      comb[k] = 1;
      for (const auto& row : rows) {
        if (is_zero(r[row.pivot])) continue;
        const Rational f = r[row.pivot];
        for (std::size_t i = 0; i < n; ++i)
          if (!is_zero(row.vec[i])) r[i] -= f * row.vec[i];
        for (std::size_t i = 0; i < row.comb.size(); ++i) comb[i] -= f * row.comb[i];
      }
      std::size_t piv = 0;
      while (piv < n && is_zero(r[piv])) ++piv;
      if (piv == n) {
        dense::trim(comb);
        result = dense::lcm(result, comb);
        break;
      }
      const Rational p = r[piv];
      for (auto& x : r) x /= p;
      for (auto& x : comb) x /= p;
      rows.push_back({std::move(r), std::move(comb), piv});
      v = mul_vec(m, v);
    }
    if (dense::degree(result) == static_cast<long>(n)) break;
  }
  return result;
}

inline Polynomial min_poly(const RatMatrix& m) { return from_dense(lambda_ring(), 0, min_poly_dense(m)); }

}  // namespace decgroup

#endif  // DECGROUP_MATRIX_HPP
