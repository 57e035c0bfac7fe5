#pragma once

// Brute-force references for the unit and acceptance tests. They read only the
// multiplication table (or raw permutations) and share no code with the library.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "complementa/group.hpp"
#include "complementa/subgroup.hpp"

namespace oracle {

using Members = std::vector<std::uint32_t>;

/// Naive fixpoint closure of `seed` under multiplication.
Members close(const complementa::FiniteGroup& g, Members seed);

/// Every subgroup, found by closing each known subgroup with each missing element.
std::set<Members> subgroups_by_closure(const complementa::FiniteGroup& g);

/// Every subgroup, found by testing each subset that contains the identity. Order ≤ 16 only.
std::set<Members> subgroups_by_subsets(const complementa::FiniteGroup& g);

Members members(const complementa::Subgroup& h);

/// ⟨[a,b] : a ∈ A, b ∈ B⟩ from all pairs.
Members commutator(const complementa::FiniteGroup& g, const Members& a, const Members& b);

/// {ab : a ∈ A, b ∈ B}.
std::set<std::uint32_t> product(const complementa::FiniteGroup& g, const Members& a, const Members& b);

bool is_normal(const complementa::FiniteGroup& g, const Members& h);

/// Number of derived-series steps to reach {1}, or -1 if it stalls.
int derived_length(const complementa::FiniteGroup& g, const Members& h);

struct PermFingerprint {
  std::size_t order = 0;
  bool abelian = true;
  std::size_t exponent = 1;
};

/// Closure of permutations (0-based images) by composing pairs until nothing new appears.
PermFingerprint permutation_closure(const std::vector<std::vector<std::uint32_t>>& gens);

/// Order, abelian flag and exponent straight from the table.
PermFingerprint table_fingerprint(const complementa::FiniteGroup& g);

/// m·log₂m split into integer and fractional parts, in quad precision.
struct Split {
  std::int64_t integer = 0;
  long double fraction = 0;
};
Split m_log2_m(std::uint64_t m);

/// 5·log₉((n-2)/8) in quad precision.
Split log9_term(std::uint64_t n);

/// The same two quantities at 50 significant digits, to vet the quad-precision versions.
Split m_log2_m_wide(std::uint64_t m);
Split log9_term_wide(std::uint64_t n);

struct GuardBandResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

/**
 * For every m in [1, max_m]: the reported integers (n, ζ(n), floor of the
 * derived-length bound) agree with quad-precision floors, and every floored
 * fractional part lies more than 10⁻⁹ from an integer.
 */
GuardBandResult guard_band(std::uint64_t max_m);

}  // namespace oracle
