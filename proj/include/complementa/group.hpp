#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complementa/element_set.hpp"
#include "complementa/error.hpp"
#include "complementa/subgroup.hpp"

namespace complementa {

/// Size limits shared by constructors and exhaustive searches.
struct Limits {
  static constexpr std::size_t construction = 4096;
  static constexpr std::size_t associativity_audit = 512;
  static constexpr std::size_t lattice = 512;
};

/// A permutation of {0, ..., degree-1}; `p[i]` is the image of point i.
using Permutation = std::vector<std::uint32_t>;

/// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4 5)". "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/**
 * A finite group given by its full multiplication table.
 *
 * Elements are dense indices 0..order-1 with the identity at 0. Every
 * instance is audited on construction: Latin-square rows and columns, the
 * identity row, inverses, that the generators reach every element, and (up
 * to `Limits::associativity_audit` elements) associativity of all triples.
 * Instances are immutable.
 */
class FiniteGroup {
 public:
  /// Audits and wraps a row-major table. Labels are regenerated from
  /// `generator_names` when `labels` is empty.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> mult,
                                std::vector<Element> generators,
                                std::vector<std::string> generator_names = {},
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, long long k) const;
  /// `g^by`, i.e. by⁻¹·g·by.
  Element conj(Element g, Element by) const { return mul(mul(inv(by), g), by); }
  /// [a,b] = a⁻¹b⁻¹ab.
  Element commutator(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::span<const Element> generators() const { return generators_; }
  std::span<const std::string> generator_names() const { return generator_names_; }
  const std::string& label(Element e) const { return labels_[e]; }
  std::span<const std::string> labels() const { return labels_; }
  std::span<const Element> table() const { return mult_; }

  /// Breadth-first spanning tree over the generators: every non-identity
  /// element e equals mul(tree_parent(e), generators()[tree_generator(e)]).
  Element tree_parent(Element e) const { return parent_[e]; }
  std::size_t tree_generator(Element e) const { return parent_gen_[e]; }
  /// Elements in breadth-first order from the identity.
  std::span<const Element> bfs_order() const { return bfs_order_; }

  /// Evaluates a word such as "x^2*a", "x^-1 b" or "e" over generator names.
  Element evaluate(std::string_view word) const;

  ElementSet empty_set() const { return ElementSet(order_); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

 private:
  FiniteGroup() = default;
  void audit_and_index();

  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<Element> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> labels_;
  std::vector<Element> parent_;
  std::vector<std::size_t> parent_gen_;
  std::vector<Element> bfs_order_;
};

/// Formats a generator-index word (run-length compressed), "e" when empty.
std::string format_word(std::span<const std::size_t> word, std::span<const std::string> names);

// ---------------------------------------------------------------------------
// Constructors

/// Closure of permutations by breadth-first search from the identity, in
/// generator order. An empty list gives the trivial group.
FiniteGroup from_generators(const std::vector<Permutation>& perms,
                            std::vector<std::string> names = {},
                            std::size_t cap = Limits::construction);

FiniteGroup cyclic(std::size_t n, std::string name = "x");

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t cap = Limits::construction);

/**
 * Right action of `acting` on `acted` by automorphisms, given on generators:
 * `images[i][n]` is n^h for the i-th generator h of `acting`.
 */
struct ActionSpec {
  const FiniteGroup* acting = nullptr;
  const FiniteGroup* acted = nullptr;
  std::vector<Permutation> images;
};

/// Builds the automorphism of `group` sending generator i to `generator_images[i]`.
/// Throws InvalidStructure when the assignment is not a bijective homomorphism.
Permutation automorphism_from_images(const FiniteGroup& group, std::span<const Element> generator_images);

/**
 * Semidirect product N ⋊ H in which conjugation by h ∈ H realises the
 * action: h⁻¹·n·h = n^h. Elements are pairs multiplied by
 * (h₁n₁)(h₂n₂) = (h₁h₂)(n₁^{h₂}n₂). Generators are those of N followed by
 * those of H, and the result is enumerated breadth-first over them.
 */
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const ActionSpec& action,
                               std::size_t cap = Limits::construction);

struct Quotient {
  FiniteGroup group;
  /// Element of the parent -> coset index.
  std::vector<Element> projection;
};

/// G/N with cosets numbered by ascending minimal representative.
Quotient quotient(const FiniteGroup& g, const Subgroup& normal);

struct EmbeddedGroup {
  FiniteGroup group;
  /// Element of `group` -> element of the parent.
  std::vector<Element> embedding;
};

/// A subgroup rebuilt as a standalone group (generated by a greedy generating set).
EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

/// Extends generator images to a map G -> H; throws InvalidStructure if it is not a homomorphism.
std::vector<Element> homomorphism_from_images(const FiniteGroup& g, const FiniteGroup& h,
                                              std::span<const Element> generator_images);

// ---------------------------------------------------------------------------
// Element-level queries

std::size_t element_order(const FiniteGroup& g, Element e);
std::size_t exponent(const FiniteGroup& g);
/// Primes dividing some element order (the set π(G)).
std::set<std::uint64_t> primes_of(const FiniteGroup& g);

bool is_prime(std::uint64_t n);
/// Returns p when n = p^k with k ≥ 1.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

}  // namespace complementa
