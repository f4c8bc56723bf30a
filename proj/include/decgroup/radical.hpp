#ifndef DECGROUP_RADICAL_HPP
#define DECGROUP_RADICAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "matrix.hpp"
#include "quotient.hpp"
#include "univariate.hpp"

namespace decgroup {

/// Minimal polynomials of the multiplication matrices, in lambda_ring().
/// The i-th one generates I ∩ K[x_i].
inline std::vector<Dense> eliminant_polys(const QuotientStructure& q) {
  std::vector<Dense> out;
  for (const auto& m : q.matrices()) out.push_back(min_poly_dense(m));
  return out;
}

/// Over the rationals a zero-dimensional ideal is radical iff every
/// univariate eliminant is squarefree.
inline bool is_radical(const QuotientStructure& q) {
  for (const auto& p : eliminant_polys(q))
    if (!dense::is_squarefree(p)) return false;
  return true;
}

inline bool is_radical(const GroebnerBasis& g) { return is_radical(QuotientStructure(g, false)); }

/// Reduced basis of the radical: G plus the squarefree parts of the eliminants.
/// Returns `g` itself when it is already radical.
inline GroebnerBasis radicalize(const GroebnerBasis& g, const Deadline& deadline = {}) {
  if (g.is_unit()) return g;
  const QuotientStructure q(g, false);
  const auto elim = eliminant_polys(q);
  std::vector<Polynomial> gens = g.generators();
  bool changed = false;
  for (std::size_t i = 0; i < elim.size(); ++i) {
    if (dense::is_squarefree(elim[i])) continue;
    gens.push_back(from_dense(g.ring(), i, dense::squarefree_part(elim[i])));
    changed = true;
  }
  if (!changed) return g;
  return buchberger(gens, deadline);
}

/// Does f vanish on every point of Zero(<G>)? Adjoins a fresh variable z and
/// tests whether <G, 1 - z*f> is the unit ideal.
inline bool radical_membership(const Polynomial& f, const GroebnerBasis& g, const Deadline& deadline = {}) {
  Polynomial::check_compatible(f, Polynomial(g.ring()));
  if (g.is_unit() || normal_form(f, g).is_zero()) return true;
  std::string z = "z";
  while (g.ring()->index_of(z)) z += "_";
  const RingPtr ext = with_extra_variable(g.ring(), z);
  std::vector<Polynomial> gens;
  for (const auto& p : g.generators()) gens.push_back(p.embedded(ext));
  const Polynomial zf = Polynomial::variable(ext, g.arity()) * f.embedded(ext);
  gens.push_back(Polynomial::constant(ext, Rational(1)) - zf);
  return buchberger(gens, deadline).is_unit();
}

}  // namespace decgroup

#endif  // DECGROUP_RADICAL_HPP
