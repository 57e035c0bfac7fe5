#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "complementa/group.hpp"

namespace complementa {

/// Least subgroup containing `elems`.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> elems);
/// Audits that `members` is closed under multiplication; throws PreconditionError otherwise.
Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& members);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Greedy generating set: members of `h` in index order that are not yet generated.
std::vector<Element> generating_set(const FiniteGroup& g, const Subgroup& h);

/// Distinct cyclic subgroups, each with its least-index generator.
std::vector<std::pair<Element, Subgroup>> cyclic_subgroups(const FiniteGroup& g);

/**
 * Every subgroup of a group together with its covering relation, conjugacy
 * classes and normality flags. Subgroups are in canonical order, so index 0
 * is the trivial subgroup and the last index is the whole group.
 */
struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  /// (i, j): subgroups[i] is a maximal subgroup of subgroups[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::vector<std::size_t>> conjugacy_classes;
  std::vector<bool> normal;

  std::size_t size() const { return subgroups.size(); }
  std::size_t whole() const { return subgroups.size() - 1; }
  std::optional<std::size_t> index_of(const Subgroup& h) const;
  /// Indices of subgroups with the given order, ascending.
  std::span<const std::size_t> of_order(std::size_t order) const;
  /// Indices of maximal subgroups of the whole group.
  std::vector<std::size_t> maximal() const;

 private:
  friend SubgroupLattice all_subgroups(const FiniteGroup&, std::size_t);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_order_;
};

/// Complete subgroup lattice by layered joins with cyclic subgroups.
SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t cap = Limits::lattice);

/// All K with H ⊆ K ⊆ G, by joins of H with cyclic subgroups; canonical order.
std::vector<Subgroup> overgroups(const FiniteGroup& g, const Subgroup& h);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// h^x for every x, deduplicated, canonical order.
std::vector<Subgroup> conjugates(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element by);
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h);
/// Intersection of all conjugates.
Subgroup core(const FiniteGroup& g, const Subgroup& h);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

struct ProductSet {
  ElementSet elements;
  bool is_subgroup = false;
};

/// The set AB = {ab}. Checks |AB|·|A∩B| = |A|·|B| and throws std::logic_error if it fails.
ProductSet product_set(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/**
 * Given A ⊆ B and G = AT, reports whether B = A(B∩T). The modular law says
 * it always does, so a false return indicates an engine fault. Throws
 * PreconditionError when A ⊄ B or AT ≠ G.
 */
bool dedekind_identity_check(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, const Subgroup& t);

bool is_abelian(const FiniteGroup& g, const Subgroup& h);
bool is_abelian(const FiniteGroup& g);
/// Abelian of prime exponent; the trivial group counts.
bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h);
bool is_elementary_abelian(const FiniteGroup& g);

}  // namespace complementa
