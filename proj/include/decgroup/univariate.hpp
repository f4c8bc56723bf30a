#ifndef DECGROUP_UNIVARIATE_HPP
#define DECGROUP_UNIVARIATE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace decgroup {

/// Dense univariate coefficients, index k holds the coefficient of x^k.
/// Trailing zeros are trimmed so the zero polynomial is empty.
using Dense = std::vector<Rational>;

namespace dense {

inline void trim(Dense& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

inline long degree(const Dense& p) { return static_cast<long>(p.size()) - 1; }

inline Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

inline Dense sub(const Dense& a, const Dense& b) {
  Dense r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Dense mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  trim(a);
  if (a.size() < b.size()) return {Dense{}, a};
  Dense q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

/// Monic gcd; gcd(0, 0) = 0.
inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

inline Dense lcm(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  return monic(divmod(mul(a, b), gcd(a, b)).first);
}

inline Dense derivative(const Dense& p) {
  if (p.size() <= 1) return {};
  Dense d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  trim(d);
  return d;
}

/// p / gcd(p, p'), made monic. Over the rationals this is the product of the
/// distinct irreducible factors.
inline Dense squarefree_part(const Dense& p) {
  if (p.empty()) return p;
  auto g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

inline bool is_squarefree(const Dense& p) { return gcd(p, derivative(p)).size() <= 1; }

inline Rational evaluate(const Dense& p, const Rational& x) {
  Rational v(0);
  for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}

}  // namespace dense

/// The one variable `p` uses, nullopt for constants; throws if it uses several.
inline std::optional<std::size_t> sole_variable(const Polynomial& p) {
  std::optional<std::size_t> var;
  for (std::size_t v = 0; v < p.arity(); ++v) {
    if (!p.uses_variable(v)) continue;
    if (var) throw Error("polynomial is not univariate");
    var = v;
  }
  return var;
}

inline Dense to_dense(const Polynomial& p, std::size_t var) {
  Dense d(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) throw Error("polynomial is not univariate");
    d[t.mono[var]] = t.coeff;
  }
  dense::trim(d);
  return d;
}

inline Polynomial from_dense(const RingPtr& ring, std::size_t var, const Dense& d) {
  std::vector<Term> ts;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (is_zero(d[k])) continue;
    ts.push_back({Monomial::variable(ring->arity(), var, static_cast<Monomial::Exponent>(k)), d[k]});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

namespace detail {

inline std::size_t common_variable(const Polynomial& a, const Polynomial& b) {
  auto va = sole_variable(a);
  auto vb = sole_variable(b);
  if (va && vb && *va != *vb) throw Error("polynomials are univariate in different variables");
  return va ? *va : (vb ? *vb : 0);
}

}  // namespace detail

/// Monic gcd of two polynomials in the same single variable.
inline Polynomial univariate_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_compatible(a, b);
  const auto v = detail::common_variable(a, b);
  return from_dense(a.ring(), v, dense::gcd(to_dense(a, v), to_dense(b, v)));
}

inline Polynomial univariate_lcm(const Polynomial& a, const Polynomial& b) {
  Polynomial::check_compatible(a, b);
  const auto v = detail::common_variable(a, b);
  return from_dense(a.ring(), v, dense::lcm(to_dense(a, v), to_dense(b, v)));
}

/// Formal derivative with respect to the polynomial's only variable.
inline Polynomial derivative(const Polynomial& p) {
  const auto v = sole_variable(p);
  if (!v) return Polynomial(p.ring());
  return from_dense(p.ring(), *v, dense::derivative(to_dense(p, *v)));
}

inline Polynomial squarefree_part(const Polynomial& p) {
  const auto v = sole_variable(p);
  if (!v) return p.monic();
  return from_dense(p.ring(), *v, dense::squarefree_part(to_dense(p, *v)));
}

}  // namespace decgroup

#endif  // DECGROUP_UNIVARIATE_HPP
