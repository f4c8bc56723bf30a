#ifndef DECGROUP_PERM_HPP
#define DECGROUP_PERM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace decgroup {

/// Bijection of {0..n-1}; printed 1-based in cycle notation.
/// Composition is right to left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
    return p;
  }

  static Permutation from_images(std::vector<std::size_t> images) {
    std::vector<bool> hit(images.size(), false);
    for (auto v : images) {
      if (v >= images.size() || hit[v]) throw Error("images do not form a permutation");
      hit[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Swaps i and j (0-based).
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
    Permutation p = identity(n);
    std::swap(p.images_.at(i), p.images_.at(j));
    return p;
  }

  /// Parses 1-based cycle notation such as "(1 2)(3 4)", "(1,2)" or "()".
  static Permutation parse_cycles(std::string_view text, std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
    return r;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw ArityMismatch("permutation degrees differ");
    Permutation r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  /// Points moved by the permutation.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) s.push_back(i);
    return s;
  }

  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      out += "(";
      std::size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = true;
        if (!first) out += " ";
        out += std::to_string(j + 1);
        first = false;
        j = images_[j];
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::size_t> images_;
};

inline Permutation Permutation::parse_cycles(std::string_view text, std::size_t n) {
  Permutation result = identity(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("cycle notation: " + what, 1, pos + 1);
  };
  skip();
  if (pos == text.size()) fail("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (v < 1 || v > n) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (std::find(cycle.begin(), cycle.end(), v - 1) != cycle.end()) fail("repeated point in cycle");
      cycle.push_back(v - 1);
    }
    if (cycle.size() > 1) {
      Permutation c = identity(n);
      for (std::size_t k = 0; k < cycle.size(); ++k) c.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
      result = result * c;
    }
    skip();
  }
  return result;
}

/// Comma-separated permutations, e.g. "(1 2),(1 2 3 4 5)"; commas inside
/// parentheses belong to the cycle.
inline std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t n) {
  std::vector<Permutation> out;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')' && depth > 0) --depth;
    if (c == ',' && depth == 0) {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos) out.push_back(Permutation::parse_cycles(piece, n));
      start = i + 1;
    }
  }
  return out;
}

/// psi_sigma: x_i -> x_{sigma(i)}.
inline Polynomial apply_perm(const Permutation& sigma, const Polynomial& f) {
  return substitute_variables(f, sigma.images());
}

inline std::vector<Polynomial> apply_perm_polys(const Permutation& sigma, const std::vector<Polynomial>& ps) {
  std::vector<Polynomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(apply_perm(sigma, p));
  return out;
}

inline constexpr std::size_t kDefaultEnumerationCap = 10;

/// An explicit subgroup of S_n, elements sorted and duplicate-free.
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(std::size_t n) { return PermGroup(n, {Permutation::identity(n)}); }

  /// Audited construction: throws unless `elements` is closed under
  /// composition and inverses and contains the identity.
  static PermGroup from_elements(std::size_t n, std::vector<Permutation> elements) {
    for (const auto& e : elements)
      if (e.degree() != n) throw ArityMismatch("permutation degree differs from group degree");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    PermGroup g(n, std::move(elements));
    g.audit();
    return g;
  }

  /// All permutations of `block` fixing every other point.
  static PermGroup symmetric_on(std::size_t n, const std::vector<std::size_t>& block,
                                std::size_t cap = kDefaultEnumerationCap) {
    if (block.size() > cap)
      throw EnumerationCapExceeded("block of size " + std::to_string(block.size()) +
                                   " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::size_t> sorted(block);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> elems;
    std::vector<std::size_t> img(sorted);
    do {
      auto images = Permutation::identity(n).images();
      for (std::size_t k = 0; k < sorted.size(); ++k) images[sorted[k]] = img[k];
      elems.push_back(Permutation::from_images(std::move(images)));
    } while (std::next_permutation(img.begin(), img.end()));
    std::sort(elems.begin(), elems.end());
    return PermGroup(n, std::move(elems));
  }

  static PermGroup symmetric(std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return symmetric_on(n, all, cap);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  bool is_subgroup_of(const PermGroup& other) const {
    if (degree_ != other.degree_) return false;
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
  }

  /// Deterministic generating set: scan elements in order, keep those not
  /// generated by the ones kept so far.
  std::vector<Permutation> generators() const;

  /// Throws std::logic_error if the element list is not a group: the
  /// closure of a generating set drawn from the list must reproduce it.
  void audit() const;

  /// tau * G * tau^-1.
  PermGroup conjugated(const Permutation& tau) const {
    std::vector<Permutation> elems;
    const Permutation inv = tau.inverse();
    for (const auto& g : elements_) elems.push_back(tau * g * inv);
    std::sort(elems.begin(), elems.end());
    return PermGroup(degree_, std::move(elems));
  }

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

 private:
  friend PermGroup group_closure(const std::vector<Permutation>&, std::size_t);
  PermGroup(std::size_t n, std::vector<Permutation> sorted) : degree_(n), elements_(std::move(sorted)) {}

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
};

/// Smallest group containing `gens` (breadth-first closure).
inline PermGroup group_closure(const std::vector<Permutation>& gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.degree() != n) throw ArityMismatch("generator degree differs from n");
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  return PermGroup(n, std::vector<Permutation>(seen.begin(), seen.end()));
}

inline std::vector<Permutation> PermGroup::generators() const {
  std::vector<Permutation> gens;
  PermGroup current = trivial(degree_);
  for (const auto& e : elements_) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = group_closure(gens, degree_);
    if (current.order() == order()) break;
  }
  return gens;
}

inline void PermGroup::audit() const {
  if (!contains(Permutation::identity(degree_))) throw std::logic_error("group lacks the identity");
  if (!(group_closure(generators(), degree_) == *this)) throw std::logic_error("element list is not closed");
}

struct BlockFactor {
  std::vector<std::size_t> block;
  PermGroup group;
};

/// Internal direct product of groups acting on pairwise disjoint blocks.
inline PermGroup direct_product_on_blocks(const std::vector<BlockFactor>& factors, std::size_t n) {
  std::vector<bool> used(n, false);
  for (const auto& f : factors) {
    if (f.group.degree() != n) throw ArityMismatch("factor degree differs from n");
    for (auto i : f.block) {
      if (i >= n) throw ArityMismatch("block point out of range");
      if (used[i]) throw Error("blocks overlap");
      used[i] = true;
    }
    for (const auto& e : f.group.elements())
      for (auto moved : e.support())
        if (std::find(f.block.begin(), f.block.end(), moved) == f.block.end())
          throw Error("factor moves a point outside its block");
  }
  std::vector<Permutation> elems{Permutation::identity(n)};
  for (const auto& f : factors) {
    std::vector<Permutation> next;
    next.reserve(elems.size() * f.group.order());
    for (const auto& a : elems)
      for (const auto& b : f.group.elements()) next.push_back(a * b);
    elems = std::move(next);
  }
  return PermGroup::from_elements(n, std::move(elems));
}

struct GroupReport {
  std::size_t order = 0;
  std::vector<std::string> generators;
  std::string tag;  // empty when no name applies
};

/// True when `g` is conjugate in S_n to the symmetries of a square whose
/// vertices, in cyclic order, are the four moved points.
inline bool is_dihedral_on_four_points(const PermGroup& g) {
  if (g.order() != 8) return false;
  std::vector<std::size_t> support;
  for (const auto& e : g.elements())
    for (auto i : e.support()) support.push_back(i);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.size() != 4) return false;
  const std::size_t n = g.degree();
  // <(1 2 3 4), (1 3)> relabelled through every bijection onto the support.
  std::vector<std::size_t> img(support);
  do {
    auto rot = Permutation::identity(n).images();
    for (std::size_t k = 0; k < 4; ++k) rot[img[k]] = img[(k + 1) % 4];
    auto refl = Permutation::identity(n).images();
    std::swap(refl[img[0]], refl[img[2]]);
    const PermGroup d4 = group_closure(
        {Permutation::from_images(std::move(rot)), Permutation::from_images(std::move(refl))}, n);
    if (d4 == g) return true;
  } while (std::next_permutation(img.begin(), img.end()));
  return false;
}

/// True when `g` has order 2k, moves exactly k >= 3 points, and contains a
/// k-cycle c together with an involution r satisfying r c r = c^-1.
inline bool is_dihedral(const PermGroup& g) {
  std::vector<std::size_t> support;
  for (const auto& e : g.elements())
    for (auto i : e.support()) support.push_back(i);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const std::size_t k = support.size();
  if (k < 3 || g.order() != 2 * k) return false;
  for (const auto& c : g.elements()) {
    const auto cycles = c.to_cycles();
    if (c.support().size() != k || std::count(cycles.begin(), cycles.end(), '(') != 1) continue;
    for (const auto& r : g.elements())
      if (!r.is_identity() && (r * r).is_identity() && r * c * r == c.inverse()) return true;
  }
  return false;
}

inline GroupReport describe(const PermGroup& g) {
  GroupReport r;
  r.order = g.order();
  for (const auto& p : g.generators()) r.generators.push_back(p.to_cycles());
  if (g.order() == 1) {
    r.tag = "trivial";
    return r;
  }
  std::vector<std::size_t> support;
  for (const auto& e : g.elements())
    for (auto i : e.support()) support.push_back(i);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= support.size(); ++k) factorial *= k;
  if (g.order() == factorial) {
    if (support.size() == g.degree()) {
      r.tag = "S_" + std::to_string(g.degree());
    } else {
      r.tag = "S_" + std::to_string(support.size()) + " on {";
      for (std::size_t k = 0; k < support.size(); ++k) r.tag += (k ? "," : "") + std::to_string(support[k] + 1);
      r.tag += "}";
    }
  } else if (is_dihedral_on_four_points(g)) {
    r.tag = "D_4 (dihedral on 4 points)";
  } else if (is_dihedral(g)) {
    r.tag = "D_" + std::to_string(g.order() / 2) + " (dihedral on " + std::to_string(g.order() / 2) + " points)";
  }
  return r;
}

}  // namespace decgroup

#endif  // DECGROUP_PERM_HPP
