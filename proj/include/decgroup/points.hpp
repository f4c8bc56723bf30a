#ifndef DECGROUP_POINTS_HPP
#define DECGROUP_POINTS_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace decgroup {

using Point = std::vector<Rational>;

inline void check_points(const std::vector<Point>& points, std::size_t arity) {
  std::set<std::vector<std::string>> seen;
  for (const auto& p : points) {
    if (p.size() != arity) throw ArityMismatch("point has " + std::to_string(p.size()) +
                                               " coordinates, expected " + std::to_string(arity));
    std::vector<std::string> key;
    for (const auto& c : p) key.push_back(c.get_str());
    if (!seen.insert(key).second) throw Error("duplicate point");
  }
}

/// Reduced Groebner basis of the vanishing ideal of `points` under the
/// order of `ring` (Buchberger-Moeller). Monomials are visited in increasing
/// order; each one either extends the standard basis or, when its evaluation
/// vector depends on those of smaller standard monomials, yields a basis
/// element with that leading monomial.
inline GroebnerBasis ideal_of_points(const std::vector<Point>& points, const RingPtr& ring) {
  const std::size_t n = ring->arity();
  check_points(points, n);
  const auto& order = ring->order();
  const std::size_t m = points.size();

  struct Row {
    std::vector<Rational> values;  // evaluation vector, normalised at pivot
    std::vector<Rational> comb;    // coefficients over the standard monomials
    std::size_t pivot;
  };
  std::vector<Monomial> standard;
  std::vector<Row> rows;
  std::vector<Polynomial> gens;
  std::vector<Monomial> leads;

  auto cmp = [&](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(cmp)> candidates(cmp);
  candidates.insert(Monomial(n));

  while (!candidates.empty()) {
    const Monomial t = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(t); })) continue;

    std::vector<Rational> v(m);
    for (std::size_t k = 0; k < m; ++k) {
      Rational val(1);
      for (std::size_t i = 0; i < n; ++i)
        for (Monomial::Exponent e = 0; e < t[i]; ++e) val *= points[k][i];
      v[k] = val;
    }
    std::vector<Rational> comb(standard.size() + 1);
    for (const auto& row : rows) {
      if (is_zero(v[row.pivot])) continue;
      const Rational f = v[row.pivot];
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(row.values[k])) v[k] -= f * row.values[k];
      for (std::size_t k = 0; k < row.comb.size(); ++k) comb[k] -= f * row.comb[k];
    }
    std::size_t piv = 0;
    while (piv < m && is_zero(v[piv])) ++piv;
    if (piv == m) {
      std::vector<Term> terms{{t, Rational(1)}};
      for (std::size_t k = 0; k < standard.size(); ++k)
        if (!is_zero(comb[k])) terms.push_back({standard[k], comb[k]});
      gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
      leads.push_back(t);
      continue;
    }
    comb[standard.size()] = 1;
    const Rational p = v[piv];
    for (auto& x : v) x /= p;
    for (auto& x : comb) x /= p;
    rows.push_back({std::move(v), std::move(comb), piv});
    standard.push_back(t);
    for (std::size_t i = 0; i < n; ++i) candidates.insert(t * Monomial::variable(n, i));
  }
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis::adopt(ring, std::move(gens), false);
}

}  // namespace decgroup

#endif  // DECGROUP_POINTS_HPP
