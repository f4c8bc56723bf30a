#ifndef DECGROUP_TRIANGULAR_HPP
#define DECGROUP_TRIANGULAR_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "polynomial.hpp"
#include "radical.hpp"

namespace decgroup {

/// [f_1, ..., f_n] with main_variable(f_i) = x_i.
struct TriangularSet {
  std::vector<Polynomial> polys;

  std::size_t size() const noexcept { return polys.size(); }
  friend bool operator==(const TriangularSet&, const TriangularSet&) = default;
};

struct TriangularCheck {
  std::optional<TriangularSet> set;
  std::string reason;  // why the input is not triangular; empty on success

  explicit operator bool() const noexcept { return set.has_value(); }
};

/// Sorts by main variable and checks that x_1, ..., x_n each occur as the
/// main variable of exactly one polynomial.
inline TriangularCheck is_triangular(std::vector<Polynomial> ps) {
  if (ps.empty()) return {std::nullopt, "empty polynomial list"};
  const std::size_t n = ps.front().arity();
  if (ps.size() != n)
    return {std::nullopt, std::to_string(ps.size()) + " polynomials for " + std::to_string(n) + " variables"};
  std::vector<std::optional<Polynomial>> slot(n);
  for (auto& p : ps) {
    const auto mv = p.main_variable();
    if (!mv) return {std::nullopt, "constant polynomial " + format_poly(p)};
    if (slot[*mv])
      return {std::nullopt, "two polynomials have main variable " + p.ring()->names()[*mv]};
    slot[*mv] = std::move(p);
  }
  TriangularSet t;
  for (auto& s : slot) t.polys.push_back(std::move(*s));
  return {std::move(t), {}};
}

/// Coefficients c_0, ..., c_d of f viewed as a polynomial in x_var.
inline std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var) {
  std::vector<std::vector<Term>> parts(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    const auto e = t.mono[var];
    parts[e].push_back({t.mono.quotient(Monomial::variable(f.arity(), var, e)), t.coeff});
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(f.ring(), std::move(p)));
  return out;
}

/// Leading coefficient of f in x_var.
inline Polynomial leading_coefficient_in(const Polynomial& f, std::size_t var) {
  return coefficients_in(f, var).back();
}

/// Sylvester resultant of f and g with respect to x_var.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
  Polynomial::check_compatible(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const std::size_t m = f.degree_in(var);
  const std::size_t k = g.degree_in(var);
  if (m == 0) return f.pow(k);
  if (k == 0) return g.pow(m);
  const auto a = coefficients_in(f, var);
  const auto b = coefficients_in(g, var);
  const Polynomial zero(f.ring());
  PolyMatrix s(m + k, m + k, zero);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j <= m; ++j) s(r, r + j) = a[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= k; ++j) s(k + r, r + j) = b[k - j];
  return determinant_bareiss(s, Polynomial::constant(f.ring(), Rational(1)));
}

/// For j = 2..n, the resultant of lc(f_j) iterated against f_{j-1}, ..., f_1
/// must be non-zero.
inline bool is_regular(const TriangularSet& t) {
  for (std::size_t j = 1; j < t.size(); ++j) {
    Polynomial r = leading_coefficient_in(t.polys[j], j);
    for (std::size_t k = j; k-- > 0;) r = resultant(r, t.polys[k], k);
    if (r.is_zero()) return false;
  }
  return true;
}

/// Zero(<T>) is contained in Zero(<G>): every generator of G lies in the
/// radical of <T>. A triangular set generates a zero-dimensional ideal, so
/// membership is a normal form against the radical's reduced basis.
inline bool verify_containment(const TriangularSet& t, const GroebnerBasis& g, const Deadline& deadline = {}) {
  if (t.polys.empty()) throw Error("empty triangular set");
  Polynomial::check_compatible(t.polys.front(), Polynomial(g.ring()));
  const GroebnerBasis rad = radicalize(buchberger(t.polys, deadline), deadline);
  for (const auto& p : g.generators())
    if (!normal_form(p, rad).is_zero()) return false;
  return true;
}

/// Primitive integer associates, positive leading coefficients.
inline TriangularSet canonical_form(const TriangularSet& t) {
  TriangularSet c;
  for (const auto& p : t.polys) c.polys.push_back(primitive_part(p));
  return c;
}

inline std::string format_triangular(const TriangularSet& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", " : "") + format_poly(t.polys[i]);
  return out + "]";
}

struct OrbitEntry {
  Permutation sigma;  // first group element producing this set
  TriangularSet set;  // canonical form
  bool verified = false;
};

struct OrbitReport {
  std::vector<OrbitEntry> entries;
  std::size_t not_triangular = 0;  // group elements whose image is not triangular
  std::vector<std::string> violations;
};

/// Images psi_sigma(T) over the group that are triangular after sorting,
/// deduplicated by canonical form, each checked against G. An image that
/// fails the check is kept and listed in `violations`.
inline OrbitReport orbit_triangular(const TriangularSet& t, const PermGroup& group, const GroebnerBasis& g,
                                    const Deadline& deadline = {}) {
  if (group.degree() != g.arity()) throw ArityMismatch("group degree differs from ring arity");
  if (!verify_containment(t, g, deadline))
    throw ContainmentFailure("triangular set is not contained in the variety of the ideal");
  OrbitReport report;
  for (const auto& sigma : group.elements()) {
    deadline.check("triangular orbit");
    auto check = is_triangular(apply_perm_polys(sigma, t.polys));
    if (!check) {
      ++report.not_triangular;
      continue;
    }
    TriangularSet c = canonical_form(*check.set);
    if (std::any_of(report.entries.begin(), report.entries.end(),
                    [&](const OrbitEntry& e) { return e.set == c; }))
      continue;
    const bool ok = verify_containment(c, g, deadline);
    if (!ok)
      report.violations.push_back("psi_" + sigma.to_cycles() + "(T) = " + format_triangular(c) +
                                  " is triangular but not contained in the variety");
    report.entries.push_back({sigma, std::move(c), ok});
  }
  return report;
}

}  // namespace decgroup

#endif  // DECGROUP_TRIANGULAR_HPP
