#ifndef DECGROUP_QUOTIENT_HPP
#define DECGROUP_QUOTIENT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace decgroup {

/// K[x]/I for zero-dimensional I: the standard-monomial basis b_1..b_N and
/// the multiplication matrices. Column j of matrix(i) holds the coordinates
/// of NF(x_i * b_j).
class QuotientStructure {
 public:
  QuotientStructure(GroebnerBasis basis, bool audit = true) : gb_(std::move(basis)) {
    monomials_ = quotient_basis(gb_);
    for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
    const std::size_t n = gb_.arity();
    const std::size_t dim = monomials_.size();
    mult_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      RatMatrix m(dim, dim, Rational(0));
      const Monomial xi = Monomial::variable(n, i);
      for (std::size_t j = 0; j < dim; ++j) {
        const Monomial prod = monomials_[j] * xi;
        auto hit = index_.find(prod);
        if (hit != index_.end()) {
          m(hit->second, j) = 1;
          continue;
        }
        const auto coords = coordinates(Polynomial::monomial(gb_.ring(), prod, Rational(1)));
        for (std::size_t r = 0; r < dim; ++r) m(r, j) = coords[r];
      }
      mult_.push_back(std::move(m));
    }
    if (audit) audit_commutativity();
  }

  const GroebnerBasis& groebner_basis() const noexcept { return gb_; }
  std::size_t dimension() const noexcept { return monomials_.size(); }
  std::size_t arity() const { return gb_.arity(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const RatMatrix& matrix(std::size_t i) const { return mult_.at(i); }
  const std::vector<RatMatrix>& matrices() const noexcept { return mult_; }

  /// Coordinates of [f] in the standard-monomial basis.
  std::vector<Rational> coordinates(const Polynomial& f) const {
    std::vector<Rational> c(dimension());
    const Polynomial r = normal_form(f, gb_);
    for (const auto& t : r.terms()) c[index_.at(t.mono)] = t.coeff;
    return c;
  }

  /// Matrix of m_f computed from normal forms of f * b_j.
  RatMatrix multiplication_matrix(const Polynomial& f) const {
    RatMatrix m(dimension(), dimension(), Rational(0));
    for (std::size_t j = 0; j < dimension(); ++j) {
      const auto c = coordinates(f.mul_term(monomials_[j], Rational(1)));
      for (std::size_t r = 0; r < dimension(); ++r) m(r, j) = c[r];
    }
    return m;
  }

  /// f(M_1, ..., M_n) by substitution into the multiplication matrices.
  RatMatrix matrix_of(const Polynomial& f) const {
    Polynomial::check_compatible(f, Polynomial(gb_.ring()));
    const std::size_t dim = dimension();
    RatMatrix acc(dim, dim, Rational(0));
    for (const auto& t : f.terms()) {
      RatMatrix term = scaled(rat_identity(dim), t.coeff);
      for (std::size_t v = 0; v < arity(); ++v)
        for (Monomial::Exponent e = 0; e < t.mono[v]; ++e) term = term * mult_[v];
      acc = acc + term;
    }
    return acc;
  }

  void audit_commutativity() const {
    for (std::size_t i = 0; i < mult_.size(); ++i)
      for (std::size_t j = i + 1; j < mult_.size(); ++j)
        if (!(mult_[i] * mult_[j] == mult_[j] * mult_[i]))
          throw std::logic_error("multiplication matrices do not commute");
  }

 private:
  GroebnerBasis gb_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<RatMatrix> mult_;
};

inline QuotientStructure mult_matrices(const GroebnerBasis& g) { return QuotientStructure(g); }

/// f_i = det(lambda*Id - M_i) for every variable.
inline std::vector<Polynomial> variable_char_polys(const QuotientStructure& q) {
  std::vector<Polynomial> fs;
  fs.reserve(q.arity());
  for (const auto& m : q.matrices()) fs.push_back(char_poly_rat(m));
  return fs;
}

/// det(lambda*Id - sum_{i in block} t_i*M_i) in symbolic_ring(n).
inline Polynomial block_char_poly(const QuotientStructure& q, const std::vector<std::size_t>& block,
                                  std::size_t cutoff = kDefaultSymbolicCutoff) {
  if (block.empty()) throw std::invalid_argument("empty variable block");
  std::vector<std::pair<std::size_t, RatMatrix>> tagged;
  for (auto i : block) {
    if (i >= q.arity()) throw ArityMismatch("block index out of range");
    tagged.emplace_back(i, q.matrix(i));
  }
  return char_poly_sym(tagged, q.arity(), cutoff);
}

}  // namespace decgroup

#endif  // DECGROUP_QUOTIENT_HPP
