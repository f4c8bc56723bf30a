#ifndef DECGROUP_POLYNOMIAL_HPP
#define DECGROUP_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace decgroup {

/// Variable names plus the monomial order every polynomial of the ring is
/// stored under. Rings are immutable and shared between polynomials.
class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order)
      : names_(std::move(names)), order_(std::move(order)) {
    if (order_.arity() != names_.size())
      throw ArityMismatch("monomial order arity differs from variable count");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw Error("duplicate variable '" + n + "'");
  }

  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const MonomialOrder& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), std::move(order));
}

inline RingPtr make_ring(std::vector<std::string> names, OrderKind kind = OrderKind::degrevlex) {
  const auto n = names.size();
  return make_ring(std::move(names), MonomialOrder(kind, n));
}

inline RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return make_ring(ring->names(), std::move(order));
}

inline RingPtr with_order(const RingPtr& ring, OrderKind kind) {
  return with_order(ring, MonomialOrder(kind, ring->arity()));
}

/// Same ring plus one extra variable that is least significant in the order.
inline RingPtr with_extra_variable(const RingPtr& ring, const std::string& name) {
  auto names = ring->names();
  names.push_back(name);
  auto ranking = ring->order().ranking();
  ranking.push_back(ring->arity());
  return make_ring(std::move(names), MonomialOrder(ring->order().kind(), std::move(ranking)));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept strictly descending under the ring's monomial order with
/// no zero coefficients; the zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    if (!decgroup::is_zero(c)) p.terms_.push_back({Monomial(p.arity()), c});
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    if (index >= p.arity()) throw ArityMismatch("variable index out of range");
    p.terms_.push_back({Monomial::variable(p.arity(), index), Rational(1)});
    return p;
  }

  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    if (m.arity() != p.arity()) throw ArityMismatch("monomial arity differs from ring arity");
    if (!decgroup::is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Builds a polynomial from terms in any order; merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms)
      if (t.mono.arity() != p.arity()) throw ArityMismatch("term arity differs from ring arity");
    p.terms_ = normalize(std::move(terms), p.ring_->order());
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return ring_ ? ring_->arity() : 0; }
  const MonomialOrder& order() const { return ring_->order(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Rational constant_coeff() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
  }

  Monomial::Exponent total_degree() const {
    Monomial::Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Monomial::Exponent degree_in(std::size_t var) const {
    Monomial::Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }

  /// Highest-index variable occurring in the polynomial (none for constants).
  std::optional<std::size_t> main_variable() const {
    for (std::size_t v = arity(); v-- > 0;)
      if (uses_variable(v)) return v;
    return std::nullopt;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coeff());
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r(a.ring_);
    r.terms_ = add_scaled(a.terms_, b.terms_, Rational(1), nullptr, a.order());
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r(a.ring_);
    r.terms_ = add_scaled(a.terms_, b.terms_, Rational(-1), nullptr, a.order());
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    r.terms_ = normalize(std::move(prod), a.order());
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    Polynomial r(a.ring_);
    if (decgroup::is_zero(c)) return r;
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// this * c * m. Multiplying by a monomial preserves the term order.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (decgroup::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// this - c * m * g, the elementary reduction step.
  Polynomial sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) const {
    check_compatible(*this, g);
    Polynomial r(ring_);
    r.terms_ = add_scaled(terms_, g.terms_, -c, &m, order());
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// The same polynomial re-sorted under another ring of equal arity.
  Polynomial in_ring(RingPtr ring) const {
    if (ring->arity() != arity()) throw ArityMismatch("cannot move polynomial between rings of different arity");
    if (same_ring(ring, ring_)) {
      Polynomial r(*this);
      r.ring_ = std::move(ring);
      return r;
    }
    return from_terms(std::move(ring), terms_);
  }

  /// Embeds into a ring whose first arity() variables coincide with this ring's.
  Polynomial embedded(RingPtr ring) const {
    if (ring->arity() < arity()) throw ArityMismatch("target ring is smaller");
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back({t.mono.extended(ring->arity()), t.coeff});
    return from_terms(std::move(ring), std::move(ts));
  }

  /// Checks the storage invariant; throws std::logic_error on violation.
  void audit() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (decgroup::is_zero(terms_[i].coeff)) throw std::logic_error("zero coefficient stored");
      if (terms_[i].mono.arity() != arity()) throw std::logic_error("term arity mismatch");
      if (i > 0 && order().compare(terms_[i - 1].mono, terms_[i].mono) <= 0)
        throw std::logic_error("terms not strictly descending");
    }
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.arity() != b.arity() || a.terms_.size() != b.terms_.size()) return false;
    if (same_ring(a.ring_, b.ring_) || (a.ring_ && b.ring_ && a.order() == b.order())) {
      for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
      return true;
    }
    return (a - b.in_ring(a.ring_)).is_zero();
  }

  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_) throw ArityMismatch("polynomial without a ring");
    if (!same_ring(a.ring_, b.ring_)) {
      if (a.arity() != b.arity()) throw ArityMismatch("arity mismatch");
      throw ArityMismatch("polynomials belong to different rings");
    }
  }

 private:
  static std::vector<Term> normalize(std::vector<Term> terms, const MonomialOrder& order) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& x, const Term& y) { return order.compare(x.mono, y.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
        if (decgroup::is_zero(out.back().coeff)) out.pop_back();
      } else if (!decgroup::is_zero(t.coeff)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  // a + c * shift * b, both inputs sorted descending.
  static std::vector<Term> add_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                                      const Rational& c, const Monomial* shift,
                                      const MonomialOrder& order) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bj;
    auto load = [&](std::size_t k) { bj = shift ? b[k].mono * *shift : b[k].mono; };
    if (j < b.size()) load(j);
    while (i < a.size() && j < b.size()) {
      int cmp = order.compare(a[i].mono, bj);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({bj, c * b[j].coeff});
        if (++j < b.size()) load(j);
      } else {
        Rational s = a[i].coeff + c * b[j].coeff;
        if (!decgroup::is_zero(s)) out.push_back({a[i].mono, std::move(s)});
        ++i;
        if (++j < b.size()) load(j);
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    while (j < b.size()) {
      out.push_back({bj, c * b[j].coeff});
      if (++j < b.size()) load(j);
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// psi: substitutes x_i -> x_{images[i]} (0-based images of a permutation).
inline Polynomial substitute_variables(const Polynomial& f, const std::vector<std::size_t>& images) {
  if (images.size() != f.arity()) throw ArityMismatch("permutation degree differs from ring arity");
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({t.mono.permuted(images), t.coeff});
  return Polynomial::from_terms(f.ring(), std::move(ts));
}

inline Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  if (point.size() != p.arity()) throw ArityMismatch("point length differs from ring arity");
  Rational sum(0);
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (Monomial::Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

/// Replaces variable `var` by the constant `value`.
inline Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value) {
  std::vector<Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto exps = t.mono.exponents();
    Rational c = t.coeff;
    for (Monomial::Exponent e = 0; e < exps[var]; ++e) c *= value;
    exps[var] = 0;
    ts.push_back({Monomial(std::move(exps)), std::move(c)});
  }
  return Polynomial::from_terms(p.ring(), std::move(ts));
}

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Multivariate division of `a` by the single polynomial `b`.
inline DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_compatible(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& lt = b.leading_term();
  std::vector<Term> q;
  Polynomial rem(a.ring());
  std::vector<Term> rest;
  Polynomial p = a;
  while (!p.is_zero()) {
    const auto& t = p.leading_term();
    if (lt.mono.divides(t.mono)) {
      Monomial m = t.mono.quotient(lt.mono);
      Rational c = t.coeff / lt.coeff;
      q.push_back({m, c});
      p = p.sub_mul_term(c, m, b);
    } else {
      rest.push_back(t);
      p = p - Polynomial::monomial(p.ring(), t.mono, t.coeff);
    }
  }
  return {Polynomial::from_terms(a.ring(), std::move(q)),
          Polynomial::from_terms(a.ring(), std::move(rest))};
}

/// a / b when b divides a exactly; throws otherwise.
inline Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Integer-coefficient associate with content 1 and positive leading coefficient.
inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer content = 0;
  for (const auto& t : p.terms()) {
    Integer num = t.coeff.get_num() * (den / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den, content);
  scale.canonicalize();
  if (sgn(p.leading_coeff()) < 0) scale = -scale;
  return p * scale;
}

}  // namespace decgroup

#endif  // DECGROUP_POLYNOMIAL_HPP
