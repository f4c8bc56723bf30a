#ifndef DECGROUP_DEC_HPP
#define DECGROUP_DEC_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "perm.hpp"
#include "points.hpp"
#include "polynomial.hpp"
#include "quotient.hpp"
#include "radical.hpp"

namespace decgroup {

/// Partition of the variable indices; members sorted, blocks ordered by
/// their smallest member.
struct VariablePartition {
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const VariablePartition&, const VariablePartition&) = default;

  /// 1-based, e.g. "{{1,2,3},{4}}".
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      out += b ? ",{" : "{";
      for (std::size_t k = 0; k < blocks[b].size(); ++k) out += (k ? "," : "") + std::to_string(blocks[b][k] + 1);
      out += "}";
    }
    return out + "}";
  }
};

namespace detail {

template <class Eq>
VariablePartition partition_by(std::size_t n, Eq&& same) {
  VariablePartition p;
  std::vector<bool> placed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> block{i};
    placed[i] = true;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!placed[j] && same(i, j)) {
        block.push_back(j);
        placed[j] = true;
      }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

inline PermGroup block_preserving_group(const VariablePartition& p, std::size_t n, std::size_t cap) {
  std::vector<BlockFactor> factors;
  for (const auto& b : p.blocks) factors.push_back({b, PermGroup::symmetric_on(n, b, cap)});
  return direct_product_on_blocks(factors, n);
}

}  // namespace detail

/// Groups indices whose characteristic polynomials coincide.
inline VariablePartition partition_variables(const std::vector<Polynomial>& fs) {
  return detail::partition_by(fs.size(), [&](std::size_t i, std::size_t j) { return fs[i] == fs[j]; });
}

/// Sym(F) restricted to permutations of `block`: the sigma with
/// F(t_sigma(1), ..., t_sigma(n), lambda) = F. F lives in symbolic_ring(n).
/// Block permutations are tried in lexicographic order; each is rejected at
/// the first term whose image has a different coefficient.
inline PermGroup sym_group(const Polynomial& f, const std::vector<std::size_t>& block, std::size_t n,
                           std::size_t cap = kDefaultEnumerationCap) {
  if (f.arity() != n + 1) throw ArityMismatch("polynomial is not over n tag variables plus lambda");
  for (std::size_t v = 0; v < n; ++v)
    if (f.uses_variable(v) && std::find(block.begin(), block.end(), v) == block.end())
      throw Error("polynomial involves t" + std::to_string(v + 1) + " outside the block");
  if (block.size() > cap)
    throw EnumerationCapExceeded("block of size " + std::to_string(block.size()) + " exceeds enumeration cap " +
                                 std::to_string(cap));
  std::unordered_map<Monomial, const Rational*, MonomialHash> coeff;
  for (const auto& t : f.terms()) coeff.emplace(t.mono, &t.coeff);

  std::vector<std::size_t> sorted(block);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> img(sorted);
  std::vector<Permutation> members;
  do {
    std::vector<std::size_t> ext(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ext[i] = i;
    for (std::size_t k = 0; k < sorted.size(); ++k) ext[sorted[k]] = img[k];
    bool fixed = true;
    for (const auto& t : f.terms()) {
      auto hit = coeff.find(t.mono.permuted(ext));
      if (hit == coeff.end() || *hit->second != t.coeff) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      ext.pop_back();
      members.push_back(Permutation::from_images(std::move(ext)));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(n, std::move(members));
}

/// Definition-level membership: sigma is in Dec(<G>) iff psi_sigma maps every
/// generator into the ideal. For zero-dimensional G this forces equality.
inline bool dec_oracle_member(const Permutation& sigma, const GroebnerBasis& g) {
  if (sigma.degree() != g.arity()) throw ArityMismatch("permutation degree differs from ring arity");
  for (const auto& p : g.generators())
    if (!normal_form(apply_perm(sigma, p), g).is_zero()) return false;
  return true;
}

enum class RadicalPolicy { automatic, strict, off };
enum class Strategy { symbolic, oracle_only };

inline std::string to_string(Strategy s) { return s == Strategy::symbolic ? "symbolic" : "oracle-only"; }

struct DecOptions {
  RadicalPolicy radical = RadicalPolicy::automatic;
  std::size_t symbolic_cutoff = kDefaultSymbolicCutoff;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  // Also run the oracle-only path and require both to agree.
  bool cross_check = false;
  Deadline deadline;
};

struct DecResult {
  GroebnerBasis basis;  // after radicalization, if any
  bool radicalized = false;
  bool unit_ideal = false;
  std::size_t dimension = 0;
  VariablePartition partition;
  std::vector<Polynomial> char_polys;
  std::vector<Polynomial> block_polys;  // F_k; empty on the oracle-only path
  std::vector<PermGroup> block_groups;
  PermGroup candidate_group;
  PermGroup dec_group;
  Strategy strategy = Strategy::symbolic;
  std::vector<std::string> warnings;
};

namespace detail {

inline PermGroup filter_by_oracle(const PermGroup& candidates, const GroebnerBasis& g, const Deadline& deadline) {
  std::vector<Permutation> members;
  for (const auto& sigma : candidates.elements()) {
    deadline.check("decomposition-group oracle");
    if (dec_oracle_member(sigma, g)) members.push_back(sigma);
  }
  return PermGroup::from_elements(candidates.degree(), std::move(members));
}

}  // namespace detail

/// Dec(<G>) for a reduced basis: quotient structure, characteristic
/// polynomials, variable partition, then Sym(F_k) per block as candidates,
/// each confirmed by the definition-level oracle.
inline DecResult dec_group(const GroebnerBasis& g, const DecOptions& opts = {}) {
  DecResult r;
  const std::size_t n = g.arity();
  r.basis = g;
  if (g.is_unit()) {
    r.unit_ideal = true;
    r.strategy = Strategy::oracle_only;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    r.partition.blocks = {all};
    r.candidate_group = PermGroup::symmetric(n, opts.enumeration_cap);
    r.dec_group = r.candidate_group;
    r.block_groups = {r.candidate_group};
    r.warnings.push_back("ideal is <1> (empty variety); every permutation fixes it");
    return r;
  }
  if (!is_zero_dimensional(g)) throw NotZeroDimensional();

  QuotientStructure q(g);
  if (opts.radical != RadicalPolicy::off && !is_radical(q)) {
    if (opts.radical == RadicalPolicy::strict) throw NotRadical();
    r.basis = radicalize(g, opts.deadline);
    r.radicalized = true;
    r.warnings.push_back("input ideal is not radical; computed Dec of its radical");
    q = QuotientStructure(r.basis);
  }
  r.dimension = q.dimension();
  r.char_polys = variable_char_polys(q);
  r.partition = partition_variables(r.char_polys);

  const bool symbolic = r.dimension <= opts.symbolic_cutoff;
  r.strategy = symbolic ? Strategy::symbolic : Strategy::oracle_only;
  std::vector<BlockFactor> factors;
  for (const auto& block : r.partition.blocks) {
    opts.deadline.check("block symmetric groups");
    if (symbolic) {
      r.block_polys.push_back(block_char_poly(q, block, opts.symbolic_cutoff));
      r.block_groups.push_back(sym_group(r.block_polys.back(), block, n, opts.enumeration_cap));
    } else {
      r.block_groups.push_back(PermGroup::symmetric_on(n, block, opts.enumeration_cap));
    }
    factors.push_back({block, r.block_groups.back()});
  }
  r.candidate_group = direct_product_on_blocks(factors, n);
  r.dec_group = detail::filter_by_oracle(r.candidate_group, r.basis, opts.deadline);
  if (!r.dec_group.is_subgroup_of(r.candidate_group)) throw std::logic_error("Dec escaped its candidate group");
  if (r.dec_group.order() < r.candidate_group.order())
    r.warnings.push_back("candidate group has order " + std::to_string(r.candidate_group.order()) +
                         " but only " + std::to_string(r.dec_group.order()) +
                         " elements fix the ideal; the product of Sym(F_k) over-approximates Dec");

  if (opts.cross_check && symbolic) {
    const auto wide = detail::block_preserving_group(r.partition, n, opts.enumeration_cap);
    if (!(detail::filter_by_oracle(wide, r.basis, opts.deadline) == r.dec_group))
      throw std::logic_error("symbolic and oracle-only strategies disagree");
  }
  return r;
}

/// Full pipeline from generators, using the order of their ring.
inline DecResult dec_group(const std::vector<Polynomial>& ps, const DecOptions& opts = {}) {
  if (ps.empty()) throw Error("empty polynomial system");
  return dec_group(buchberger(ps, opts.deadline), opts);
}

struct PointDecResult {
  std::vector<std::vector<Rational>> coordinate_sets;  // S_i, sorted
  VariablePartition partition;
  PermGroup candidate_group;  // all block-preserving permutations
  PermGroup dec_group;
};

/// Dec from an explicit zero set: sigma belongs iff permuting the coordinates
/// of every point by sigma lands back in the set.
inline PointDecResult dec_from_points(const std::vector<Point>& points,
                                      std::size_t cap = kDefaultEnumerationCap) {
  if (points.empty()) throw Error("empty point set");
  const std::size_t n = points.front().size();
  check_points(points, n);
  PointDecResult r;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> s;
    for (const auto& p : points) s.push_back(p[i]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    r.coordinate_sets.push_back(std::move(s));
  }
  r.partition =
      detail::partition_by(n, [&](std::size_t i, std::size_t j) { return r.coordinate_sets[i] == r.coordinate_sets[j]; });
  r.candidate_group = detail::block_preserving_group(r.partition, n, cap);
  const std::set<Point> lookup(points.begin(), points.end());
  std::vector<Permutation> members;
  for (const auto& sigma : r.candidate_group.elements()) {
    bool ok = true;
    for (const auto& a : points) {
      Point image(n);
      for (std::size_t i = 0; i < n; ++i) image[i] = a[sigma(i)];
      if (!lookup.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(sigma);
  }
  r.dec_group = PermGroup::from_elements(n, std::move(members));
  return r;
}

}  // namespace decgroup

#endif  // DECGROUP_DEC_HPP
