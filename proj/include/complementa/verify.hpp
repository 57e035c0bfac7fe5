#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complementa/examples.hpp"
#include "complementa/group.hpp"
#include "complementa/lattice.hpp"

namespace complementa {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status status);

struct VerificationReport {
  std::string claim;
  Status status = Status::pass;
  /// Subgroup descriptions or numbers; never empty on fail.
  std::vector<std::string> witnesses;
  double elapsed_ms = 0;
};

bool any_failed(const std::vector<VerificationReport>& reports);

/// "<x, a> order 16 [0 1 2 ...]": generators as words, then the member indices.
std::string describe(const FiniteGroup& g, const Subgroup& h);

/// Structure of one p-subgroup, as needed by the p-subgroup battery.
struct PSubgroupFacts {
  std::uint64_t prime = 1;
  bool nilpotent = true;
  std::optional<std::size_t> derived_length;
  /// Smallest index in P of a normal elementary abelian subgroup of P.
  std::size_t elementary_abelian_index = 1;
};

/**
 * A group with its lattice and the derived data shared by the instance
 * verifiers. Throws CapExceeded when the lattice is over the cap.
 */
class VerificationContext {
 public:
  explicit VerificationContext(FiniteGroup g, std::size_t lattice_cap = Limits::lattice);

  const FiniteGroup& group() const { return group_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  const std::vector<bool>& complemented() const { return complemented_; }
  std::optional<std::size_t> derived_length() const { return derived_length_; }

  bool is_supercomplemented(const Subgroup& h) const;
  bool is_elementary_abelian(std::size_t lattice_index);
  /// Lattice indices of the p-subgroups, trivial subgroup included.
  const std::vector<std::size_t>& p_subgroups(std::uint64_t p);
  const PSubgroupFacts& facts(std::size_t lattice_index, std::uint64_t p);
  const std::vector<Subgroup>& minimal_normal();
  /// Cyclic subgroups with their least generators, trivial subgroup first.
  const std::vector<std::pair<Element, Subgroup>>& cyclic();

 private:
  FiniteGroup group_;
  SubgroupLattice lattice_;
  std::vector<bool> complemented_;
  std::optional<std::size_t> derived_length_;
  std::vector<signed char> elementary_abelian_;
  std::map<std::uint64_t, std::vector<std::size_t>> p_subgroups_;
  std::map<std::size_t, PSubgroupFacts> facts_;
  std::optional<std::vector<Subgroup>> minimal_normal_;
  std::optional<std::vector<std::pair<Element, Subgroup>>> cyclic_;
};

/// Claims about the holomorph of the cyclic group of order 8, in proof order.
std::vector<VerificationReport> verify_holomorph8();

/// Claims about example_group(p); p must be 2 or 3.
std::vector<VerificationReport> verify_example(std::uint64_t p);

/**
 * Finite-instance consequences of having a supercomplemented cyclic
 * p-subgroup ⟨x⟩ of order m: the derived-length bound, solvability and the
 * p-subgroup battery (nilpotent, d ≤ 3 or ≤ 2 for odd p, a normal elementary
 * abelian subgroup of index ≤ m!). With m = 1 the battery runs for every prime.
 * Every report is "skipped" when ⟨x⟩ is not a supercomplemented p-subgroup.
 */
std::vector<VerificationReport> verify_supercomplemented_instance(VerificationContext& ctx, Element x);

/// Each elementary abelian minimal normal q-subgroup Q has |Q| ≤ q^{(m-1)m}·m^m, and |Q| = q when m = 1.
std::vector<VerificationReport> verify_minimal_normal_instance(VerificationContext& ctx, Element x);

/**
 * For C-separating H: G is solvable and, for some prime p, a supercomplemented
 * cyclic p-subgroup outside H exists, every q-subgroup with q ≠ p is
 * elementary abelian and every p-subgroup passes the p-subgroup battery.
 */
std::vector<VerificationReport> verify_c_separating_instance(VerificationContext& ctx, const Subgroup& h);

/// Every module invariant over the given entries, in entry order.
std::vector<VerificationReport> run_catalog_suite(const std::vector<CatalogEntry>& entries);
std::vector<VerificationReport> run_catalog_suite();

}  // namespace complementa
