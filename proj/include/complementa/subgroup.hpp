#pragma once

#include <cstddef>
#include <vector>

#include "complementa/element_set.hpp"

namespace complementa {

/**
 * A subgroup of some parent FiniteGroup, stored as a membership bitset over
 * the parent's element indices. The parent is not referenced; every
 * operation taking a Subgroup also takes the group it lives in.
 *
 * Construct through `generated_subgroup` or `make_subgroup` (which audit
 * closure); the raw constructor trusts its caller.
 */
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(ElementSet members) : members_(std::move(members)), order_(members_.count()) {}

  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Element e) const { return members_.test(e); }
  bool is_trivial() const { return order_ == 1; }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  std::vector<Element> elements() const { return members_.members(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  ElementSet members_;
  std::size_t order_ = 0;
};

/// Canonical subgroup order: ascending order, then lexicographic members.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return lexicographic_less(a.members(), b.members());
}

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.members().hash(); }
};

}  // namespace complementa
