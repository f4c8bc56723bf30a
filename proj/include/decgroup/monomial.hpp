#ifndef DECGROUP_MONOMIAL_HPP
#define DECGROUP_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace decgroup {

/// Power product x_1^e_1 ... x_n^e_n with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
  }

  static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1) {
    Monomial m(arity);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    assert(arity() == other.arity());
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const {
    assert(divisor.divides(*this));
    Monomial q(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
    q.degree_ -= divisor.degree_;
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    std::vector<Exponent> e(a.arity());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  /// Image under the substitution x_i -> x_{images[i]}.
  Monomial permuted(const std::vector<std::size_t>& images) const {
    Monomial r(arity());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[images[i]] = exps_[i];
    r.degree_ = degree_;
    return r;
  }

  /// Same exponents embedded into a ring with `arity` >= this->arity() variables.
  Monomial extended(std::size_t arity) const {
    Monomial r(arity);
    std::copy(exps_.begin(), exps_.end(), r.exps_.begin());
    r.degree_ = degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  Exponent degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

enum class OrderKind { lex, grlex, degrevlex };

inline std::string to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "?";
}

inline OrderKind parse_order_kind(const std::string& name) {
  if (name == "lex") return OrderKind::lex;
  if (name == "grlex") return OrderKind::grlex;
  if (name == "degrevlex") return OrderKind::degrevlex;
  throw Error("unknown monomial order '" + name + "'");
}

/// A monomial order together with the variable precedence it uses.
///
/// `ranking()[0]` is the most significant variable. The default ranking
/// makes the first declared variable the most significant one, so lex over
/// (x1, x2, x3, x4) is lex with x1 > x2 > x3 > x4.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  MonomialOrder(OrderKind kind, std::size_t arity) : kind_(kind), ranking_(arity) {
    std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
  }

  MonomialOrder(OrderKind kind, std::vector<std::size_t> ranking)
      : kind_(kind), ranking_(std::move(ranking)) {
    std::vector<std::size_t> sorted(ranking_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw Error("variable ranking is not a permutation");
  }

  OrderKind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case OrderKind::lex:
        return compare_lex(a, b);
      case OrderKind::grlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return compare_lex(a, b);
      case OrderKind::degrevlex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
          if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
        }
        return 0;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_;
  }

 private:
  int compare_lex(const Monomial& a, const Monomial& b) const {
    for (auto v : ranking_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::degrevlex;
  std::vector<std::size_t> ranking_;
};

}  // namespace decgroup

#endif  // DECGROUP_MONOMIAL_HPP
