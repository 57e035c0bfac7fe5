#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "complementa/group.hpp"

namespace complementa {

/// A group plus named elements and subgroups ("x", "a", "B", ...).
struct NamedGroup {
  std::string name;
  FiniteGroup group;
  std::map<std::string, Element> elements;
  std::map<std::string, Subgroup> subgroups;

  /// Throws PreconditionError for an unknown handle.
  const Subgroup& subgroup(const std::string& handle) const;
  Element element(const std::string& handle) const;
};

/// Wraps a group, registering each generator as an element handle and its cyclic subgroup.
NamedGroup name_generators(std::string name, FiniteGroup g);

/**
 * G = A ⋊ F of order p⁵ with A = ⟨b⟩×⟨c⟩, F = ⟨x⟩ ⋊ ⟨a⟩, |x| = p², |a| = |b| = |c| = p,
 * x^a = x^{p+1}, b^x = bc, c^x = c and a centralising A. Handles: x, a, b, c,
 * A, F and B = ⟨a⟩×⟨b⟩×⟨c⟩. Every relation is re-audited on the built table.
 */
NamedGroup example_group(std::uint64_t p, std::size_t max_order = 243);

/**
 * ⟨x⟩ ⋊ (⟨a⟩×⟨b⟩) with |x| = 8, |a| = |b| = 2, x^a = x⁻¹, x^b = x⁵: the
 * holomorph of the cyclic group of order 8. Handles: x, a, b, D = ⟨a,b⟩ and
 * x2 = ⟨x²⟩.
 */
NamedGroup holomorph8_group();

/// C_n ⋊ Aut(C_n), units mod n acting by exponentiation.
FiniteGroup holomorph_cyclic(std::size_t n);

/// Dihedral group of order 2n as C_n ⋊ C_2 (Klein four-group for n = 2).
FiniteGroup dihedral(std::size_t n);
FiniteGroup elementary_abelian(std::uint64_t p, std::size_t rank);
FiniteGroup symmetric(std::size_t degree);
FiniteGroup alternating(std::size_t degree);
FiniteGroup quaternion8();
/// C_3 ⋊ C_4 with the generator of C_4 inverting C_3.
FiniteGroup dicyclic12();

struct Fingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::size_t exponent = 1;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

struct CatalogEntry {
  std::string name;
  /// Human-readable construction, e.g. "direct_product(symmetric(3), cyclic(2))".
  std::string recipe;
  std::function<NamedGroup()> build;
  Fingerprint expected;
};

/// Deterministic small-group corpus for the property suites.
std::vector<CatalogEntry> catalog();

/**
 * Builds a group by recipe name: cyclic, dihedral, elementary, symmetric,
 * alternating, quaternion, dicyclic12, holomorph, holomorph8 (alias theorem4),
 * example, or any catalog entry name. `p` and `n` parameterise the families.
 */
NamedGroup build_recipe(const std::string& recipe, std::uint64_t p = 2, std::size_t n = 1,
                        std::size_t max_order = 243);

}  // namespace complementa
