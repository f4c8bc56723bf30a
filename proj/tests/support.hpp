#ifndef DECGROUP_TESTS_SUPPORT_HPP
#define DECGROUP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <decgroup/decgroup.hpp>

namespace testsupport {

using namespace decgroup;

inline RingPtr x_ring(std::size_t n, OrderKind kind = OrderKind::degrevlex) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return make_ring(std::move(names), kind);
}

inline std::vector<Polynomial> polys(const std::string& text, OrderKind kind = OrderKind::degrevlex) {
  return parse_system(text, kind).polys;
}

inline Polynomial poly(const std::string& text, const RingPtr& ring) { return parse_polynomial(text, ring); }

/// Expanded product of the factors, each parsed in `ring`.
inline Polynomial product(const std::vector<std::string>& factors, const RingPtr& ring) {
  Polynomial acc = Polynomial::constant(ring, Rational(1));
  for (const auto& f : factors) acc *= parse_polynomial(f, ring);
  return acc;
}

// --- random generators ------------------------------------------------------

inline Rational random_rational(std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(rng));
}

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng, std::size_t terms = 4,
                                    unsigned max_exp = 2) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    std::vector<Monomial::Exponent> exps(ring->arity());
    for (auto& x : exps) x = e(rng);
    ts.push_back({Monomial(std::move(exps)), random_rational(rng)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

inline RatMatrix random_matrix(std::size_t n, std::mt19937& rng, int lo = -3, int hi = 3) {
  RatMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, lo, hi);
  return m;
}

/// Invertible by construction: unit lower times unit upper triangular.
inline RatMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  RatMatrix l = rat_identity(n), u = rat_identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_rational(rng, -2, 2);
      u(j, i) = random_rational(rng, -2, 2);
    }
  return l * u;
}

/// Up to five distinct points in at most four coordinates. Half the cases
/// are closed under a random transposition so that Dec is often non-trivial.
struct PointCase {
  std::size_t arity = 0;
  std::vector<Point> points;
};

inline std::vector<PointCase> point_corpus(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<PointCase> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const bool symmetric = n >= 2 && rng() % 2 == 0;
    const std::size_t base = std::uniform_int_distribution<std::size_t>(1, symmetric ? 2 : 5)(rng);
    std::set<Point> pts;
    for (std::size_t k = 0; k < base; ++k) {
      Point p(n);
      for (auto& c : p) c = random_rational(rng, -2, 2);
      pts.insert(p);
    }
    if (symmetric) {
      const std::size_t i = rng() % n;
      std::size_t j = rng() % n;
      if (j == i) j = (i + 1) % n;
      std::set<Point> images;
      for (auto p : pts) {
        std::swap(p[i], p[j]);
        images.insert(p);
      }
      pts.insert(images.begin(), images.end());
    }
    out.push_back({n, std::vector<Point>(pts.begin(), pts.end())});
  }
  return out;
}

// --- independent oracles ----------------------------------------------------

/// Determinant by cofactor expansion along the first row.
inline Rational det_laplace(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    RatMatrix minor(n - 1, n - 1, Rational(0));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, c) * det_laplace(minor);
    det += (c % 2 == 0) ? term : Rational(-term);
  }
  return det;
}

/// det(x*I - M) by cofactor expansion at a rational x.
inline Rational char_poly_at(const RatMatrix& m, const Rational& x) {
  RatMatrix a = scaled(m, Rational(-1));
  for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) += x;
  return det_laplace(a);
}

/// Dense coefficients of a polynomial in lambda_ring(), lowest degree first.
inline Dense lambda_coeffs(const Polynomial& p) { return to_dense(p, 0); }

/// sigma is in Dec(Zero) iff the coordinate permutation maps the point set
/// onto itself, checked over all of S_n.
inline PermGroup dec_by_exhaustion(const std::vector<Point>& points, std::size_t n) {
  const std::set<Point> lookup(points.begin(), points.end());
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> members;
  do {
    bool ok = true;
    for (const auto& a : points) {
      Point b(n);
      for (std::size_t i = 0; i < n; ++i) b[i] = a[img[i]];
      if (!lookup.count(b)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(n, std::move(members));
}

/// Sym(f) by brute force over S_n using polynomial equality.
inline PermGroup sym_by_exhaustion(const Polynomial& f, std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> members;
  do {
    std::vector<std::size_t> ext(img);
    for (std::size_t v = n; v < f.arity(); ++v) ext.push_back(v);
    if (substitute_variables(f, ext) == f) members.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(n, std::move(members));
}

inline bool vanishes_on(const Polynomial& f, const std::vector<Point>& points) {
  return std::all_of(points.begin(), points.end(), [&](const Point& p) { return is_zero(evaluate(f, p)); });
}

}  // namespace testsupport

#endif  // DECGROUP_TESTS_SUPPORT_HPP
