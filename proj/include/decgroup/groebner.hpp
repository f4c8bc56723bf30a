#ifndef DECGROUP_GROEBNER_HPP
#define DECGROUP_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

namespace decgroup {

/// Full reduction of `f` by `divisors`: no term of the result is divisible
/// by a leading monomial of a divisor. Divisors are tried in list order.
inline Polynomial reduce(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  std::vector<Term> rest;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto* g : divisors) {
      if (g->leading_monomial().divides(lt.mono)) {
        hit = g;
        break;
      }
    }
    if (hit) {
      const Rational c = lt.coeff / hit->leading_coeff();
      const Monomial m = lt.mono.quotient(hit->leading_monomial());
      p = p.sub_mul_term(c, m, *hit);
    } else {
      rest.push_back(lt);
      p = p - Polynomial::monomial(p.ring(), lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial m = lcm(f.leading_monomial(), g.leading_monomial());
  const Polynomial a = f.mul_term(m.quotient(f.leading_monomial()), Rational(1) / f.leading_coeff());
  return a.sub_mul_term(Rational(1) / g.leading_coeff(), m.quotient(g.leading_monomial()), g);
}

/// Reduced Groebner basis: monic, auto-reduced, sorted ascending by leading
/// monomial. The zero ideal has no generators; the unit ideal is {1}.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const { return ring_->order(); }
  std::size_t arity() const { return ring_->arity(); }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_constant(); }
  bool is_zero_ideal() const noexcept { return gens_.empty(); }

  std::vector<const Polynomial*> divisors() const {
    std::vector<const Polynomial*> d;
    d.reserve(gens_.size());
    for (const auto& g : gens_) d.push_back(&g);
    return d;
  }

  /// Wraps generators already known to form a reduced basis (e.g. loaded from
  /// a cache). Reducedness is always checked; `verify_s_pairs` additionally
  /// re-checks Buchberger's criterion.
  static GroebnerBasis adopt(RingPtr ring, std::vector<Polynomial> gens, bool verify_s_pairs = true);

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }

 private:
  friend GroebnerBasis make_reduced_basis(RingPtr, std::vector<Polynomial>);
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {}

  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Interreduces a minimal basis (no leading monomial divides another) into
/// the reduced one and sorts it.
inline GroebnerBasis make_reduced_basis(RingPtr ring, std::vector<Polynomial> minimal) {
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    const Polynomial& g = minimal[i];
    const Polynomial lead = Polynomial::monomial(ring, g.leading_monomial(), g.leading_coeff());
    reduced.push_back((lead + reduce(g - lead, others)).monic());
  }
  const auto& order = ring->order();
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(std::move(ring), std::move(reduced));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  Polynomial::check_compatible(f, Polynomial(g.ring()));
  return reduce(f, g.divisors());
}

/// True when every S-polynomial of `gens` reduces to zero modulo `gens`.
inline bool satisfies_buchberger_criterion(const std::vector<Polynomial>& gens) {
  std::vector<const Polynomial*> d;
  for (const auto& g : gens) d.push_back(&g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i].leading_monomial().coprime(gens[j].leading_monomial())) continue;
      if (!reduce(s_polynomial(gens[i], gens[j]), d).is_zero()) return false;
    }
  return true;
}

inline GroebnerBasis GroebnerBasis::adopt(RingPtr ring, std::vector<Polynomial> gens, bool verify_s_pairs) {
  const auto& order = ring->order();
  for (auto& g : gens) {
    g = g.in_ring(ring);
    if (g.is_zero() || g.leading_coeff() != 1) throw Error("basis element is not monic");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0 && !order.less(gens[i - 1].leading_monomial(), gens[i].leading_monomial()))
      throw Error("basis is not sorted by leading monomial");
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gens[j].terms())
        if (gens[i].leading_monomial().divides(t.mono)) throw Error("basis is not reduced");
    }
  }
  if (verify_s_pairs && !satisfies_buchberger_criterion(gens)) throw Error("basis fails Buchberger's criterion");
  return GroebnerBasis(std::move(ring), std::move(gens));
}

struct BuchbergerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

namespace detail {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const Deadline& deadline, BuchbergerStats* stats)
      : ring_(std::move(ring)), deadline_(deadline), stats_(stats) {}

  GroebnerBasis run(const std::vector<Polynomial>& input) {
    for (const auto& f : input) {
      Polynomial h = reduce(f.in_ring(ring_), active_divisors());
      if (h.is_zero()) continue;
      if (h.is_constant()) return unit();
      insert(h.monic());
    }
    while (!pairs_.empty()) {
      deadline_.check(progress());
      const auto next = select();
      CriticalPair p = pairs_[next];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(next));
      ++processed_;
      Polynomial h = reduce(s_polynomial(store_[p.i], store_[p.j]), active_divisors());
      if (h.is_zero()) {
        ++zero_reductions_;
        continue;
      }
      if (h.is_constant()) return unit();
      insert(h.monic());
    }
    std::vector<Polynomial> minimal;
    for (auto idx : active_) minimal.push_back(store_[idx]);
    report();
    return make_reduced_basis(ring_, std::move(minimal));
  }

 private:
  GroebnerBasis unit() {
    report();
    return make_reduced_basis(ring_, {Polynomial::constant(ring_, Rational(1))});
  }

  void report() const {
    if (!stats_) return;
    stats_->pairs_processed = processed_;
    stats_->zero_reductions = zero_reductions_;
    stats_->basis_size = active_.size();
  }

  std::string progress() const {
    return "Buchberger interrupted after " + std::to_string(processed_) + " pairs, basis size " +
           std::to_string(active_.size()) + ", " + std::to_string(pairs_.size()) + " pairs pending";
  }

  std::vector<const Polynomial*> active_divisors() const {
    std::vector<const Polynomial*> d;
    d.reserve(active_.size());
    for (auto idx : active_) d.push_back(&store_[idx]);
    return d;
  }

  // Normal strategy: smallest lcm degree, then lcm under the order, then indices.
  std::size_t select() const {
    const auto& order = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update: Buchberger's product and chain criteria.
  void insert(Polynomial h) {
    const std::size_t hi = store_.size();
    store_.push_back(std::move(h));
    const Monomial& lh = store_[hi].leading_monomial();

    std::vector<CriticalPair> fresh;
    for (auto g : active_) fresh.push_back({g, hi, lcm(store_[g].leading_monomial(), lh)});

    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& p = fresh[k];
      bool keep = store_[p.i].leading_monomial().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < fresh.size() && keep; ++q)
          if (fresh[q].lcm.divides(p.lcm)) keep = false;
        for (std::size_t q = 0; q < kept.size() && keep; ++q)
          if (kept[q].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<CriticalPair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(lcm(store_[p.i].leading_monomial(), lh) == p.lcm) &&
                        !(lcm(store_[p.j].leading_monomial(), lh) == p.lcm);
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!store_[p.i].leading_monomial().coprime(lh)) next.push_back(std::move(p));
    pairs_ = std::move(next);

    std::vector<std::size_t> active;
    for (auto g : active_)
      if (!lh.divides(store_[g].leading_monomial())) active.push_back(g);
    active.push_back(hi);
    active_ = std::move(active);
  }

  RingPtr ring_;
  const Deadline& deadline_;
  BuchbergerStats* stats_;
  std::deque<Polynomial> store_;
  std::vector<std::size_t> active_;
  std::vector<CriticalPair> pairs_;
  std::size_t processed_ = 0;
  std::size_t zero_reductions_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis of <ps> under the order of the polynomials' ring.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& ps, const Deadline& deadline = {},
                                BuchbergerStats* stats = nullptr) {
  if (ps.empty()) throw Error("cannot compute a Groebner basis of an empty polynomial list");
  const RingPtr ring = ps.front().ring();
  for (const auto& p : ps) Polynomial::check_compatible(ps.front(), p);
  return detail::Buchberger(ring, deadline, stats).run(ps);
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& ps, const MonomialOrder& order,
                                const Deadline& deadline = {}, BuchbergerStats* stats = nullptr) {
  if (ps.empty()) throw Error("cannot compute a Groebner basis of an empty polynomial list");
  const RingPtr ring = with_order(ps.front().ring(), order);
  std::vector<Polynomial> moved;
  for (const auto& p : ps) {
    Polynomial::check_compatible(ps.front(), p);
    moved.push_back(p.in_ring(ring));
  }
  return detail::Buchberger(ring, deadline, stats).run(moved);
}

/// Finiteness criterion: every variable has a pure power among the leading monomials.
inline bool is_zero_dimensional(const GroebnerBasis& g) {
  if (g.is_unit()) throw UnitIdeal();
  for (std::size_t v = 0; v < g.arity(); ++v) {
    bool found = false;
    for (const auto& p : g.generators()) {
      const auto& lm = p.leading_monomial();
      if (lm.degree() > 0 && lm[v] == lm.degree()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Standard monomials of a zero-dimensional basis, ascending under its order.
inline std::vector<Monomial> quotient_basis(const GroebnerBasis& g) {
  if (!is_zero_dimensional(g)) throw NotZeroDimensional();
  std::vector<Monomial> leads;
  for (const auto& p : g.generators()) leads.push_back(p.leading_monomial());
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial(g.arity())};
  seen.insert(queue.front());
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < g.arity(); ++v) {
      Monomial next = m * Monomial::variable(g.arity(), v);
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
    out.push_back(std::move(m));
  }
  const auto& order = g.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

}  // namespace decgroup

#endif  // DECGROUP_GROEBNER_HPP
