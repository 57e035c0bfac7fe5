#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "complementa/lattice.hpp"

namespace complementa {

enum class SeriesKind { derived, lower_central, chief };

std::string_view to_string(SeriesKind kind);

/// Description of one factor terms[i]/terms[i+1].
struct FactorDescription {
  std::size_t order = 1;
  bool abelian = true;
  bool elementary_abelian = true;
  /// Set when the factor order is a prime power.
  std::optional<std::uint64_t> prime;
};

struct SeriesReport {
  SeriesKind kind = SeriesKind::derived;
  /// Descending; terms.front() is the starting group.
  std::vector<Subgroup> terms;
  /// Derived length or nilpotency class; empty when the series stalls above
  /// the trivial subgroup (not solvable / not nilpotent).
  std::optional<std::size_t> length;
  std::vector<FactorDescription> factors;
};

/// [A, B], the subgroup generated by all commutators [a, b].
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

SeriesReport derived_series(const FiniteGroup& g, const Subgroup& h);
SeriesReport derived_series(const FiniteGroup& g);
/// d(H), or nullopt when H is not solvable.
std::optional<std::size_t> derived_length(const FiniteGroup& g, const Subgroup& h);
std::optional<std::size_t> derived_length(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
SeriesReport lower_central_series(const FiniteGroup& g, const Subgroup& h);
SeriesReport lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g, const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);

/// Intersection of the maximal subgroups; the whole group if it has none.
Subgroup frattini(const FiniteGroup& g, const SubgroupLattice& lattice);
Subgroup frattini(const FiniteGroup& g);

/**
 * The canonical-first Sylow p-subgroup, or when `containing` is given the
 * canonical-first one containing it. Throws PreconditionError if p is not
 * prime or if `containing` is not a p-subgroup.
 */
Subgroup sylow_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p,
                        const Subgroup* containing = nullptr);
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p);
/// Every subgroup of p-power order, the trivial subgroup included.
std::vector<Subgroup> p_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p);

/// Minimal nontrivial normal subgroups, canonical order.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);
/// Chief series G = G₀ > G₁ > … > 1, choosing the canonical-first minimal normal
/// subgroup of each successive quotient.
SeriesReport chief_series(const FiniteGroup& g);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// Describes the factor upper/lower (lower normal in upper).
FactorDescription describe_factor(const FiniteGroup& g, const Subgroup& upper, const Subgroup& lower);

}  // namespace complementa
