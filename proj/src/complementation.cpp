#include "complementa/complementation.hpp"

#include <stdexcept>

namespace complementa {

ComplementResult complements(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h,
                             SearchMode mode) {
  ComplementResult out{h, {}, mode == SearchMode::all};
  for (std::size_t i : lattice.of_order(g.order() / h.order())) {
    const auto& t = lattice.subgroups[i];
    if (h.members().intersection_count(t.members()) != 1) continue;
    if (product_set(g, h, t).elements.count() != g.order())
      throw std::logic_error("order criterion accepted a complement whose product set is not G");
    out.complements.push_back(t);
    if (mode == SearchMode::first) break;
  }
  return out;
}

ComplementResult complements(const FiniteGroup& g, const Subgroup& h, SearchMode mode) {
  return complements(g, all_subgroups(g), h, mode);
}

bool is_complemented(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h) {
  return !complements(g, lattice, h, SearchMode::first).complements.empty();
}

bool is_complemented(const FiniteGroup& g, const Subgroup& h) { return is_complemented(g, all_subgroups(g), h); }

std::vector<bool> complemented_flags(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<bool> flags(lattice.size(), false);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (flags[i]) continue;
    const auto& h = lattice.subgroups[i];
    for (std::size_t j : lattice.of_order(g.order() / h.order())) {
      if (h.members().intersection_count(lattice.subgroups[j].members()) == 1) {
        // Complementation is symmetric.
        flags[i] = true;
        flags[j] = true;
        break;
      }
    }
  }
  return flags;
}

PredicateResult is_supercomplemented(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h) {
  for (const auto& k : lattice.subgroups) {
    if (!h.is_subgroup_of(k)) continue;
    if (!is_complemented(g, lattice, k)) return {false, k};
  }
  return {true, std::nullopt};
}

PredicateResult is_supercomplemented(const FiniteGroup& g, const Subgroup& h) {
  return is_supercomplemented(g, all_subgroups(g), h);
}

PredicateResult is_completely_factorizable(const FiniteGroup& g, const SubgroupLattice& lattice) {
  const auto flags = complemented_flags(g, lattice);
  PredicateResult result{true, std::nullopt};
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!flags[i]) {
      result = {false, lattice.subgroups[i]};
      break;
    }
  const auto via_trivial = is_supercomplemented(g, lattice, trivial_subgroup(g));
  if (via_trivial.holds != result.holds || !(via_trivial.witness == result.witness))
    throw std::logic_error("complete factorizability disagrees with supercomplementation of the trivial subgroup");
  return result;
}

PredicateResult is_completely_factorizable(const FiniteGroup& g) {
  return is_completely_factorizable(g, all_subgroups(g));
}

namespace {

std::vector<std::size_t> uncomplemented(const FiniteGroup& g, const SubgroupLattice& lattice) {
  const auto flags = complemented_flags(g, lattice);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!flags[i]) out.push_back(i);
  return out;
}

bool contains_all(const SubgroupLattice& lattice, const Subgroup& h, const std::vector<std::size_t>& bad) {
  for (std::size_t k : bad)
    if (!lattice.subgroups[k].is_subgroup_of(h)) return false;
  return true;
}

}  // namespace

std::vector<Subgroup> c_separating_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice) {
  const auto bad = uncomplemented(g, lattice);
  const std::size_t whole = lattice.whole();
  std::vector<bool> failed(lattice.size(), false);
  std::vector<bool> accepted(lattice.size(), false);

  for (std::size_t i = whole; i-- > 0;) {
    if (failed[i]) continue;
    const auto& h = lattice.subgroups[i];
    if (!contains_all(lattice, h, bad)) {
      // Failures are inherited by every subgroup.
      for (std::size_t j = 0; j < i; ++j)
        if (lattice.subgroups[j].is_subgroup_of(h)) failed[j] = true;
      continue;
    }
    accepted[i] = true;
    for (std::size_t j = i + 1; j < whole; ++j)
      if (h.is_subgroup_of(lattice.subgroups[j]) && !accepted[j])
        throw std::logic_error("C-separation is not upward closed");
  }

  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < whole; ++i)
    if (accepted[i]) out.push_back(lattice.subgroups[i]);
  return out;
}

std::vector<Subgroup> c_separating_subgroups(const FiniteGroup& g) {
  return c_separating_subgroups(g, all_subgroups(g));
}

std::vector<Subgroup> c_separating_index2(const FiniteGroup& g, const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  if (g.order() % 2 != 0) return out;
  const auto bad = uncomplemented(g, lattice);
  for (std::size_t i : lattice.of_order(g.order() / 2))
    if (contains_all(lattice, lattice.subgroups[i], bad)) out.push_back(lattice.subgroups[i]);
  return out;
}

bool is_c_separating(const FiniteGroup& g, const SubgroupLattice& lattice, const Subgroup& h) {
  if (h.order() == g.order()) return false;
  return contains_all(lattice, h, uncomplemented(g, lattice));
}

bool has_c_separating(const FiniteGroup& g, const SubgroupLattice& lattice) {
  return !c_separating_subgroups(g, lattice).empty();
}

bool has_c_separating(const FiniteGroup& g) { return has_c_separating(g, all_subgroups(g)); }

namespace {

struct Inner {
  EmbeddedGroup embedded;
  std::vector<Element> to_inner;

  Subgroup pull(const Subgroup& s) const {
    ElementSet m(embedded.group.order());
    s.members().for_each([&](Element e) { m.set(to_inner[e]); });
    return Subgroup(std::move(m));
  }
};

Inner inner_group(const FiniteGroup& g, const Subgroup& k) {
  Inner out{subgroup_as_group(g, k), std::vector<Element>(g.order(), 0)};
  for (std::size_t e = 0; e < out.embedded.group.order(); ++e)
    out.to_inner[out.embedded.embedding[e]] = static_cast<Element>(e);
  return out;
}

std::vector<bool> supercomplemented_flags(const SubgroupLattice& lattice, const std::vector<bool>& complemented) {
  std::vector<bool> out(lattice.size(), true);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i; j < lattice.size() && out[i]; ++j)
      if (!complemented[j] && lattice.subgroups[i].is_subgroup_of(lattice.subgroups[j])) out[i] = false;
  return out;
}

Subgroup image_of(const Quotient& q, const Subgroup& h) {
  ElementSet image(q.group.order());
  h.members().for_each([&](Element e) { image.set(q.projection[e]); });
  return Subgroup(std::move(image));
}

}  // namespace

bool quotient_transport_check(const FiniteGroup& g, const Subgroup& h, const Subgroup& k, const Subgroup& n) {
  if (!h.is_subgroup_of(k)) throw PreconditionError("transport check requires H ⊆ K");
  if (!n.is_subgroup_of(k)) throw PreconditionError("transport check requires N ⊆ K");

  const auto inner = inner_group(g, k);
  const FiniteGroup& kg = inner.embedded.group;
  const Subgroup h_in = inner.pull(h);
  const Subgroup n_in = inner.pull(n);
  if (!is_normal(kg, n_in)) throw PreconditionError("transport check requires N normal in K");

  const auto k_lattice = all_subgroups(kg);
  if (!is_supercomplemented(kg, k_lattice, h_in).holds)
    throw PreconditionError("transport check requires H supercomplemented in K");

  const auto q = quotient(kg, n_in);
  return is_supercomplemented(q.group, image_of(q, h_in)).holds;
}

TransportScan scan_quotient_transport(const FiniteGroup& g, const SubgroupLattice& lattice) {
  TransportScan scan;
  for (const auto& k : lattice.subgroups) {
    const auto inner = inner_group(g, k);
    const FiniteGroup& kg = inner.embedded.group;
    const auto k_lattice = all_subgroups(kg);
    const auto k_super = supercomplemented_flags(k_lattice, complemented_flags(kg, k_lattice));

    auto push_out = [&](const Subgroup& s) {
      ElementSet m(g.order());
      s.members().for_each([&](Element e) { m.set(inner.embedded.embedding[e]); });
      return Subgroup(std::move(m));
    };

    for (std::size_t ni = 0; ni < k_lattice.size(); ++ni) {
      if (!k_lattice.normal[ni]) continue;
      const auto q = quotient(kg, k_lattice.subgroups[ni]);
      const auto q_lattice = all_subgroups(q.group);
      const auto q_super = supercomplemented_flags(q_lattice, complemented_flags(q.group, q_lattice));
      for (std::size_t hi = 0; hi < k_lattice.size(); ++hi) {
        if (!k_super[hi]) continue;
        ++scan.tuples;
        const auto at = q_lattice.index_of(image_of(q, k_lattice.subgroups[hi]));
        if (!at) throw std::logic_error("image of a subgroup is missing from the quotient lattice");
        if (!q_super[*at])
          scan.failures.push_back({push_out(k_lattice.subgroups[hi]), k, push_out(k_lattice.subgroups[ni])});
      }
    }
  }
  return scan;
}

}  // namespace complementa
