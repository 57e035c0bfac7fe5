#include "complementa/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace complementa {

namespace {

// A subgroup under construction: membership, element list and generators.
// Invariant: `list` is closed under right multiplication by `gens`.
struct Growing {
  ElementSet members;
  std::vector<Element> list;
  std::vector<Element> gens;

  explicit Growing(const FiniteGroup& g) : members(g.order()), list{0} { members.set(0); }

  void adjoin(const FiniteGroup& g, Element c) {
    if (members.test(c)) return;
    const std::size_t old = list.size();
    gens.push_back(c);
    auto push = [&](Element e) {
      if (!members.test(e)) {
        members.set(e);
        list.push_back(e);
      }
    };
    // Old elements are already closed under the old generators.
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i < old) {
        push(g.mul(list[i], c));
      } else {
        for (Element s : gens) push(g.mul(list[i], s));
      }
    }
  }
};

Growing grow_from(const FiniteGroup& g, const Subgroup& h) {
  Growing out(g);
  for (Element s : generating_set(g, h)) out.adjoin(g, s);
  return out;
}

std::vector<Subgroup> sorted_unique(std::vector<Subgroup> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> elems) {
  Growing out(g);
  for (Element e : elems) {
    if (e >= g.order()) throw PreconditionError("element index out of range");
    out.adjoin(g, e);
  }
  return Subgroup(std::move(out.members));
}

Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (members.universe() != g.order()) throw PreconditionError("member set belongs to another group");
  if (!members.test(0)) throw PreconditionError("member set lacks the identity");
  const auto list = members.members();
  for (Element a : list)
    for (Element b : list)
      if (!members.test(g.mul(a, b))) throw PreconditionError("member set is not closed under multiplication");
  return Subgroup(members);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.set(0);
  return Subgroup(std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.set_all();
  return Subgroup(std::move(s));
}

std::vector<Element> generating_set(const FiniteGroup& g, const Subgroup& h) {
  Growing out(g);
  h.members().for_each([&](Element e) {
    if (!out.members.test(e)) out.adjoin(g, e);
  });
  return out.gens;
}

std::vector<std::pair<Element, Subgroup>> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<std::pair<Element, Subgroup>> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (std::size_t e = 0; e < g.order(); ++e) {
    ElementSet s(g.order());
    Element x = 0;
    do {
      s.set(x);
      x = g.mul(x, static_cast<Element>(e));
    } while (x != 0);
    if (seen.insert(s).second) out.emplace_back(static_cast<Element>(e), Subgroup(std::move(s)));
  }
  return out;
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& h) const {
  auto it = index_.find(h.members());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::size_t> SubgroupLattice::of_order(std::size_t order) const {
  auto it = by_order_.find(order);
  if (it == by_order_.end()) return {};
  return it->second;
}

std::vector<std::size_t> SubgroupLattice::maximal() const {
  std::vector<std::size_t> out;
  for (auto [i, j] : covers)
    if (j == whole()) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("lattice", cap);

  std::vector<Element> cyclic_gens;
  for (const auto& [gen, c] : cyclic_subgroups(g))
    if (gen != 0) cyclic_gens.push_back(gen);

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found;
  std::vector<Growing> layer{Growing(g)};
  seen.insert(layer.front().members);
  found.emplace_back(layer.front().members);

  while (!layer.empty()) {
    std::vector<Growing> next;
    for (const Growing& s : layer) {
      for (Element c : cyclic_gens) {
        if (s.members.test(c)) continue;
        Growing joined = s;
        joined.adjoin(g, c);
        if (seen.insert(joined.members).second) {
          found.emplace_back(joined.members);
          next.push_back(std::move(joined));
        }
      }
    }
    layer = std::move(next);
  }

  SubgroupLattice lat;
  lat.subgroups = sorted_unique(std::move(found));
  const std::size_t count = lat.subgroups.size();
  for (std::size_t i = 0; i < count; ++i) {
    lat.index_.emplace(lat.subgroups[i].members(), i);
    lat.by_order_[lat.subgroups[i].order()].push_back(i);
  }

  for (std::size_t j = 0; j < count; ++j) {
    const auto& big = lat.subgroups[j];
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < j; ++i) {
      const auto& small = lat.subgroups[i];
      if (small.order() < big.order() && big.order() % small.order() == 0 && small.is_subgroup_of(big))
        below.push_back(i);
    }
    // Largest first: a candidate is maximal unless inside an already accepted one.
    std::vector<std::size_t> maximal;
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
      const auto& cand = lat.subgroups[*it];
      const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](std::size_t m) {
        return lat.subgroups[m].order() > cand.order() && cand.is_subgroup_of(lat.subgroups[m]);
      });
      if (!covered) maximal.push_back(*it);
    }
    std::sort(maximal.begin(), maximal.end());
    for (std::size_t i : maximal) lat.covers.emplace_back(i, j);
  }
  std::sort(lat.covers.begin(), lat.covers.end());

  lat.normal.assign(count, false);
  std::vector<bool> assigned(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit{i};
    assigned[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (Element s : g.generators()) {
        const auto image = conjugate(g, lat.subgroups[orbit[k]], s);
        auto it = lat.index_.find(image.members());
        if (it == lat.index_.end()) throw std::logic_error("subgroup lattice is not closed under conjugation");
        if (!assigned[it->second]) {
          assigned[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) lat.normal[i] = true;
    lat.conjugacy_classes.push_back(std::move(orbit));
  }
  return lat;
}

std::vector<Subgroup> overgroups(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> cyclic_gens;
  for (const auto& [gen, c] : cyclic_subgroups(g))
    if (!h.contains(gen)) cyclic_gens.push_back(gen);

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> found{h};
  std::vector<Growing> layer{grow_from(g, h)};
  seen.insert(h.members());
  while (!layer.empty()) {
    std::vector<Growing> next;
    for (const Growing& s : layer) {
      for (Element c : cyclic_gens) {
        if (s.members.test(c)) continue;
        Growing joined = s;
        joined.adjoin(g, c);
        if (seen.insert(joined.members).second) {
          found.emplace_back(joined.members);
          next.push_back(std::move(joined));
        }
      }
    }
    layer = std::move(next);
  }
  return sorted_unique(std::move(found));
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Element by) {
  ElementSet out(g.order());
  h.members().for_each([&](Element e) { out.set(g.conj(e, by)); });
  return Subgroup(std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  bool normal = true;
  for (Element s : g.generators()) {
    h.members().for_each([&](Element e) {
      if (normal && !h.contains(g.conj(e, s))) normal = false;
    });
    if (!normal) return false;
  }
  return true;
}

std::vector<Subgroup> conjugates(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Subgroup> orbit{h};
  std::unordered_set<ElementSet, ElementSetHash> seen{h.members()};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (Element s : g.generators()) {
      auto image = conjugate(g, orbit[k], s);
      if (seen.insert(image.members()).second) orbit.push_back(std::move(image));
    }
  }
  return sorted_unique(std::move(orbit));
}

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h) {
  Growing out = grow_from(g, h);
  for (std::size_t k = 0; k < out.list.size(); ++k) {
    const Element m = out.list[k];
    for (Element s : g.generators()) out.adjoin(g, g.conj(m, s));
  }
  return Subgroup(std::move(out.members));
}

Subgroup core(const FiniteGroup& g, const Subgroup& h) {
  ElementSet acc = h.members();
  for (const auto& c : conjugates(g, h)) acc &= c.members();
  return Subgroup(std::move(acc));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) { return Subgroup(a.members() & b.members()); }

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  Growing out = grow_from(g, a);
  for (Element s : generating_set(g, b)) out.adjoin(g, s);
  return Subgroup(std::move(out.members));
}

ProductSet product_set(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  const auto as = a.elements();
  const auto bs = b.elements();
  ProductSet out{ElementSet(g.order()), false};
  ElementSet reversed(g.order());
  for (Element x : as)
    for (Element y : bs) {
      out.elements.set(g.mul(x, y));
      reversed.set(g.mul(y, x));
    }
  const std::size_t common = a.members().intersection_count(b.members());
  if (out.elements.count() * common != a.order() * b.order())
    throw std::logic_error("product formula |AB||A∩B| = |A||B| violated");
  // AB is a subgroup exactly when AB = BA.
  out.is_subgroup = out.elements == reversed;
  return out;
}

bool dedekind_identity_check(const FiniteGroup& g, const Subgroup& a, const Subgroup& b, const Subgroup& t) {
  if (!a.is_subgroup_of(b)) throw PreconditionError("modular law check requires A ⊆ B");
  if (product_set(g, a, t).elements.count() != g.order())
    throw PreconditionError("modular law check requires G = AT");
  const auto rhs = product_set(g, a, intersection(b, t));
  return rhs.elements == b.members();
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

bool is_abelian(const FiniteGroup& g) { return is_abelian(g, whole_group(g)); }

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h) {
  if (!is_abelian(g, h)) return false;
  const auto gens = generating_set(g, h);
  if (gens.empty()) return true;
  const std::size_t p = element_order(g, gens.front());
  if (!is_prime(p)) return false;
  return std::all_of(gens.begin(), gens.end(), [&](Element s) { return element_order(g, s) == p; });
}

bool is_elementary_abelian(const FiniteGroup& g) { return is_elementary_abelian(g, whole_group(g)); }

}  // namespace complementa
