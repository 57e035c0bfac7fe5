#include "complementa/series.hpp"

#include <algorithm>

namespace complementa {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::derived:
      return "derived";
    case SeriesKind::lower_central:
      return "lower-central";
    case SeriesKind::chief:
      return "chief";
  }
  return "unknown";
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  const auto gens_a = generating_set(g, a);
  const auto gens_b = generating_set(g, b);
  std::vector<Element> seeds;
  for (Element x : gens_a)
    for (Element y : gens_b) seeds.push_back(g.commutator(x, y));
  Subgroup current = generated_subgroup(g, seeds);

  // [A,B] is the normal closure of the generator commutators in <A,B>.
  std::vector<Element> conjugators = gens_a;
  conjugators.insert(conjugators.end(), gens_b.begin(), gens_b.end());
  for (;;) {
    std::vector<Element> extra;
    for (Element m : generating_set(g, current))
      for (Element s : conjugators) {
        const Element c = g.conj(m, s);
        if (!current.contains(c)) extra.push_back(c);
      }
    if (extra.empty()) return current;
    auto elems = current.elements();
    elems.insert(elems.end(), extra.begin(), extra.end());
    current = generated_subgroup(g, elems);
  }
}

FactorDescription describe_factor(const FiniteGroup& g, const Subgroup& upper, const Subgroup& lower) {
  FactorDescription d;
  d.order = upper.order() / lower.order();
  if (d.order > 1) d.prime = prime_power_base(d.order);
  const auto gens = generating_set(g, upper);
  d.abelian = true;
  for (std::size_t i = 0; i < gens.size() && d.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!lower.contains(g.commutator(gens[i], gens[j]))) {
        d.abelian = false;
        break;
      }
  if (d.order == 1) {
    d.elementary_abelian = true;
  } else if (!d.abelian || !d.prime || !is_prime(*d.prime)) {
    d.elementary_abelian = false;
  } else {
    d.elementary_abelian = std::all_of(gens.begin(), gens.end(), [&](Element s) {
      return lower.contains(g.pow(s, static_cast<long long>(*d.prime)));
    });
  }
  return d;
}

namespace {

void describe_all(const FiniteGroup& g, SeriesReport& r) {
  for (std::size_t i = 0; i + 1 < r.terms.size(); ++i) r.factors.push_back(describe_factor(g, r.terms[i], r.terms[i + 1]));
}

}  // namespace

SeriesReport derived_series(const FiniteGroup& g, const Subgroup& h) {
  SeriesReport r;
  r.kind = SeriesKind::derived;
  r.terms.push_back(h);
  for (;;) {
    const auto& last = r.terms.back();
    if (last.is_trivial()) {
      r.length = r.terms.size() - 1;
      break;
    }
    auto next = commutator_subgroup(g, last, last);
    if (next == last) break;
    r.terms.push_back(std::move(next));
  }
  describe_all(g, r);
  return r;
}

SeriesReport derived_series(const FiniteGroup& g) { return derived_series(g, whole_group(g)); }

std::optional<std::size_t> derived_length(const FiniteGroup& g, const Subgroup& h) {
  return derived_series(g, h).length;
}

std::optional<std::size_t> derived_length(const FiniteGroup& g) { return derived_series(g).length; }

Subgroup center(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  ElementSet out(g.order());
  h.members().for_each([&](Element e) {
    if (std::all_of(gens.begin(), gens.end(), [&](Element s) { return g.mul(e, s) == g.mul(s, e); })) out.set(e);
  });
  return Subgroup(std::move(out));
}

Subgroup center(const FiniteGroup& g) { return center(g, whole_group(g)); }

SeriesReport lower_central_series(const FiniteGroup& g, const Subgroup& h) {
  SeriesReport r;
  r.kind = SeriesKind::lower_central;
  r.terms.push_back(h);
  for (;;) {
    const auto& last = r.terms.back();
    if (last.is_trivial()) {
      r.length = r.terms.size() - 1;
      break;
    }
    auto next = commutator_subgroup(g, last, h);
    if (next == last) break;
    r.terms.push_back(std::move(next));
  }
  describe_all(g, r);
  return r;
}

SeriesReport lower_central_series(const FiniteGroup& g) { return lower_central_series(g, whole_group(g)); }

bool is_nilpotent(const FiniteGroup& g, const Subgroup& h) { return lower_central_series(g, h).length.has_value(); }

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(g, whole_group(g)); }

Subgroup frattini(const FiniteGroup& g, const SubgroupLattice& lattice) {
  ElementSet acc(g.order());
  acc.set_all();
  for (std::size_t i : lattice.maximal()) acc &= lattice.subgroups[i].members();
  return Subgroup(std::move(acc));
}

Subgroup frattini(const FiniteGroup& g) { return frattini(g, all_subgroups(g)); }

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup sylow_subgroup(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p,
                        const Subgroup* containing) {
  if (!is_prime(p)) throw PreconditionError("Sylow subgroup requested for a non-prime");
  if (containing && !is_power_of(containing->order(), p))
    throw PreconditionError("Sylow subgroup requested to contain a subgroup that is not a p-subgroup");
  for (std::size_t i : lattice.of_order(p_part(g.order(), p))) {
    const auto& s = lattice.subgroups[i];
    if (!containing || containing->is_subgroup_of(s)) return s;
  }
  throw std::logic_error("no Sylow subgroup found; lattice is incomplete");
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("Sylow subgroups requested for a non-prime");
  std::vector<Subgroup> out;
  for (std::size_t i : lattice.of_order(p_part(g.order(), p))) out.push_back(lattice.subgroups[i]);
  return out;
}

std::vector<Subgroup> p_subgroups(const FiniteGroup& g, const SubgroupLattice& lattice, std::uint64_t p) {
  (void)g;
  if (!is_prime(p)) throw PreconditionError("p-subgroups requested for a non-prime");
  std::vector<Subgroup> out;
  for (const auto& s : lattice.subgroups)
    if (is_power_of(s.order(), p)) out.push_back(s);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  // Each minimal normal subgroup is the normal closure of any of its
  // nontrivial elements, so the minimal closures are exactly the answer.
  std::vector<Subgroup> closures;
  for (std::size_t e = 1; e < g.order(); ++e) {
    const auto x = static_cast<Element>(e);
    const std::vector<Element> one{x};
    closures.push_back(normal_closure(g, generated_subgroup(g, one)));
  }
  std::sort(closures.begin(), closures.end(), canonical_less);
  closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
  std::vector<Subgroup> minimal;
  for (const auto& c : closures) {
    const bool has_smaller = std::any_of(minimal.begin(), minimal.end(), [&](const Subgroup& m) { return m.is_subgroup_of(c); });
    if (!has_smaller) minimal.push_back(c);
  }
  return minimal;
}

SeriesReport chief_series(const FiniteGroup& g) {
  // Build ascending 1 = N₀ < N₁ < … < G, then reverse.
  std::vector<Subgroup> ascending{trivial_subgroup(g)};
  while (ascending.back().order() < g.order()) {
    const auto q = quotient(g, ascending.back());
    const auto minimal = minimal_normal_subgroups(q.group);
    const auto& chosen = minimal.front();
    ElementSet preimage(g.order());
    for (std::size_t e = 0; e < g.order(); ++e)
      if (chosen.contains(q.projection[e])) preimage.set(static_cast<Element>(e));
    ascending.emplace_back(std::move(preimage));
  }
  SeriesReport r;
  r.kind = SeriesKind::chief;
  r.terms.assign(ascending.rbegin(), ascending.rend());
  r.length = r.terms.size() - 1;
  describe_all(g, r);
  return r;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  ElementSet out(g.order());
  for (std::size_t e = 0; e < g.order(); ++e) {
    const auto x = static_cast<Element>(e);
    if (std::all_of(gens.begin(), gens.end(), [&](Element s) { return h.contains(g.conj(s, x)); })) out.set(x);
  }
  return Subgroup(std::move(out));
}

}  // namespace complementa
