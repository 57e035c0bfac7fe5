#pragma once

#include <optional>
#include <vector>

#include "complementa/lattice.hpp"

namespace complementa {

enum class SearchMode { first, all };

/// Complements T of H: G = HT and H ∩ T = 1.
struct ComplementResult {
  Subgroup subject;
  std::vector<Subgroup> complements;
  /// True when every complement was collected rather than the first one.
  bool exhaustive = false;
};

/// Outcome of a yes/no property, with the offending subgroup when it fails.
struct PredicateResult {
  bool holds = false;
  std::optional<Subgroup> witness;

  explicit operator bool() const { return holds; }
};

/**
 * Scans the subgroups of order |G|/|H| in canonical order and keeps those
 * meeting H trivially. Every hit is re-checked against the explicit product
 * set HT = G (std::logic_error if that ever disagrees).
 */
ComplementResult complements(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h,
                             SearchMode mode = SearchMode::first);
ComplementResult complements(const FiniteGroup& g, const Subgroup& h, SearchMode mode = SearchMode::first);

bool is_complemented(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h);
bool is_complemented(const FiniteGroup& g, const Subgroup& h);

/// complemented[i] for every lattice.subgroups[i].
std::vector<bool> complemented_flags(const FiniteGroup& g, const SubgroupLattice& lattice);

/// Every overgroup of H complemented; the witness is the first (canonical) overgroup that is not.
PredicateResult is_supercomplemented(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h);
PredicateResult is_supercomplemented(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup complemented; the witness is the first that is not.
PredicateResult is_completely_factorizable(const FiniteGroup& g, const SubgroupLattice& lattice);
PredicateResult is_completely_factorizable(const FiniteGroup& g);

/**
 * Proper subgroups H such that every subgroup not contained in H is
 * complemented, in canonical order. Subgroups are scanned largest first and
 * overgroups of a success are accepted without rescanning.
 */
std::vector<Subgroup> c_separating_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice);
std::vector<Subgroup> c_separating_subgroups(const FiniteGroup& g);
/// Same test restricted to candidates of index 2.
std::vector<Subgroup> c_separating_index2(const FiniteGroup& g, const SubgroupLattice& lattice);
bool is_c_separating(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h);
bool has_c_separating(const FiniteGroup& g, const SubgroupLattice& lattice);
bool has_c_separating(const FiniteGroup& g);

/**
 * Homomorphic-image transport: given H ⊆ K ≤ G with H supercomplemented in K
 * and N normal in K, checks that HN/N is supercomplemented in K/N (which
 * must always hold). Throws PreconditionError when the hypotheses fail.
 */
bool quotient_transport_check(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, const Subgroup& n);

struct TransportFailure {
  Subgroup h, k, n;
};

struct TransportScan {
  std::size_t tuples = 0;
  std::vector<TransportFailure> failures;
};

/// The transport check over every valid (H, K, N) of G, sharing lattices between tuples.
TransportScan scan_quotient_transport(const FiniteGroup& g, const SubgroupLattice& lattice);

}  // namespace complementa
