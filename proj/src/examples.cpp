#include "complementa/examples.hpp"

#include <array>
#include <numeric>

#include "complementa/lattice.hpp"

namespace complementa {

const Subgroup& NamedGroup::subgroup(const std::string& handle) const {
  auto it = subgroups.find(handle);
  if (it == subgroups.end()) throw PreconditionError("unknown subgroup handle \"" + handle + "\" for " + name);
  return it->second;
}

Element NamedGroup::element(const std::string& handle) const {
  auto it = elements.find(handle);
  if (it == elements.end()) throw PreconditionError("unknown element handle \"" + handle + "\" for " + name);
  return it->second;
}

namespace {

Subgroup span_of(const FiniteGroup& g, std::initializer_list<Element> elems) {
  const std::vector<Element> v(elems);
  return generated_subgroup(g, v);
}

void audit(bool ok, const std::string& relation) {
  if (!ok) throw InvalidStructure("relation " + relation + " fails in the built table");
}

Permutation inversion_on(const FiniteGroup& n) {
  Permutation p(n.order());
  for (std::size_t k = 0; k < n.order(); ++k) p[k] = n.inv(static_cast<Element>(k));
  return p;
}

}  // namespace

NamedGroup name_generators(std::string name, FiniteGroup g) {
  NamedGroup out{std::move(name), std::move(g), {}, {}};
  for (std::size_t i = 0; i < out.group.generators().size(); ++i) {
    const auto& gen_name = out.group.generator_names()[i];
    const Element e = out.group.generators()[i];
    out.elements.emplace(gen_name, e);
    out.subgroups.emplace(gen_name, span_of(out.group, {e}));
  }
  return out;
}

NamedGroup example_group(std::uint64_t p, std::size_t max_order) {
  if (!is_prime(p)) throw PreconditionError("example group needs a prime p");
  const std::uint64_t order = p * p * p * p * p;
  if (order > max_order) throw CapExceeded("example order", max_order);

  const auto cx = cyclic(p * p, "x");
  const auto ca = cyclic(p, "a");
  const Element x1 = cx.generators()[0];
  const std::array<Element, 1> twist{cx.pow(x1, static_cast<long long>(p + 1))};
  const ActionSpec on_x{&ca, &cx, {automorphism_from_images(cx, twist)}};
  const auto f = semidirect_product(cx, ca, on_x);  // generators x, a

  const auto a_grp = direct_product(cyclic(p, "b"), cyclic(p, "c"));  // generators b, c
  const Element b1 = a_grp.generators()[0];
  const Element c1 = a_grp.generators()[1];
  const std::array<Element, 2> by_x{a_grp.mul(b1, c1), c1};
  const std::array<Element, 2> by_a{b1, c1};
  const ActionSpec on_a{&f, &a_grp, {automorphism_from_images(a_grp, by_x), automorphism_from_images(a_grp, by_a)}};
  auto g = semidirect_product(a_grp, f, on_a, std::max<std::size_t>(max_order, order));

  const Element b = g.generators()[0];
  const Element c = g.generators()[1];
  const Element x = g.generators()[2];
  const Element a = g.generators()[3];
  audit(element_order(g, x) == p * p, "|x| = p^2");
  audit(element_order(g, a) == p && element_order(g, b) == p && element_order(g, c) == p, "|a| = |b| = |c| = p");
  audit(g.conj(x, a) == g.pow(x, static_cast<long long>(p + 1)), "x^a = x^(p+1)");
  audit(g.conj(b, x) == g.mul(b, c), "b^x = bc");
  audit(g.conj(c, x) == c, "c^x = c");
  audit(g.conj(b, a) == b, "b^a = b");
  audit(g.conj(c, a) == c, "c^a = c");
  audit(g.mul(b, c) == g.mul(c, b), "bc = cb");

  NamedGroup out{"example" + std::to_string(p), std::move(g), {}, {}};
  const auto& gr = out.group;
  out.elements = {{"x", x}, {"a", a}, {"b", b}, {"c", c}};
  out.subgroups.emplace("x", span_of(gr, {x}));
  out.subgroups.emplace("a", span_of(gr, {a}));
  out.subgroups.emplace("b", span_of(gr, {b}));
  out.subgroups.emplace("c", span_of(gr, {c}));
  out.subgroups.emplace("A", span_of(gr, {b, c}));
  out.subgroups.emplace("F", span_of(gr, {x, a}));
  out.subgroups.emplace("B", span_of(gr, {a, b, c}));
  return out;
}

NamedGroup holomorph8_group() {
  const auto cx = cyclic(8, "x");
  const auto v = direct_product(cyclic(2, "a"), cyclic(2, "b"));
  const Element x1 = cx.generators()[0];
  const std::array<Element, 1> invert{cx.inv(x1)};
  const std::array<Element, 1> fifth{cx.pow(x1, 5)};
  const ActionSpec act{&v, &cx, {automorphism_from_images(cx, invert), automorphism_from_images(cx, fifth)}};
  auto g = semidirect_product(cx, v, act);

  const Element x = g.generators()[0];
  const Element a = g.generators()[1];
  const Element b = g.generators()[2];
  audit(element_order(g, x) == 8, "|x| = 8");
  audit(element_order(g, a) == 2 && element_order(g, b) == 2, "|a| = |b| = 2");
  audit(g.conj(x, a) == g.inv(x), "x^a = x^-1");
  audit(g.conj(x, b) == g.pow(x, 5), "x^b = x^5");
  audit(g.mul(a, b) == g.mul(b, a), "ab = ba");

  NamedGroup out{"holomorph8", std::move(g), {}, {}};
  const auto& gr = out.group;
  out.elements = {{"x", x}, {"a", a}, {"b", b}};
  out.subgroups.emplace("x", span_of(gr, {x}));
  out.subgroups.emplace("a", span_of(gr, {a}));
  out.subgroups.emplace("b", span_of(gr, {b}));
  out.subgroups.emplace("D", span_of(gr, {a, b}));
  out.subgroups.emplace("x2", span_of(gr, {gr.mul(x, x)}));
  return out;
}

FiniteGroup holomorph_cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("holomorph of the cyclic group needs n >= 1");
  const auto cn = cyclic(n, "x");
  // Units mod n as permutations k -> u·k of {0..n-1}; greedy generators.
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  std::vector<bool> reached(n, false);
  reached[1 % n] = true;
  std::vector<std::uint64_t> group_units{1 % n};
  for (std::uint64_t u = 2; u < n; ++u) {
    if (std::gcd(u, n) != 1 || reached[u]) continue;
    Permutation p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint32_t>((u * k) % n);
    perms.push_back(std::move(p));
    names.push_back("u" + std::to_string(u));
    for (std::size_t i = 0; i < group_units.size(); ++i) {
      const std::uint64_t next = (group_units[i] * u) % n;
      if (!reached[next]) {
        reached[next] = true;
        group_units.push_back(next);
      }
    }
  }
  const auto aut = from_generators(perms, names);
  // cyclic(n) numbers x^k as k, so the unit permutation is the automorphism itself.
  ActionSpec act{&aut, &cn, perms};
  return semidirect_product(cn, aut, act);
}

FiniteGroup dihedral(std::size_t n) {
  const auto rot = cyclic(n, "r");
  const auto flip = cyclic(2, "s");
  ActionSpec act{&flip, &rot, {inversion_on(rot)}};
  return semidirect_product(rot, flip, act);
}

FiniteGroup elementary_abelian(std::uint64_t p, std::size_t rank) {
  if (!is_prime(p)) throw PreconditionError("elementary abelian group needs a prime");
  if (rank == 0) return cyclic(1);
  auto g = cyclic(p, "e1");
  for (std::size_t i = 2; i <= rank; ++i) g = direct_product(g, cyclic(p, "e" + std::to_string(i)));
  return g;
}

FiniteGroup symmetric(std::size_t degree) {
  if (degree <= 1) return cyclic(1);
  std::string cycle = "(";
  for (std::size_t i = 1; i <= degree; ++i) cycle += std::to_string(i) + (i < degree ? " " : ")");
  if (degree == 2) return from_generators({parse_cycles("(1 2)", 2)}, {"t"});
  return from_generators({parse_cycles("(1 2)", degree), parse_cycles(cycle, degree)}, {"t", "c"});
}

FiniteGroup alternating(std::size_t degree) {
  if (degree <= 2) return cyclic(1);
  if (degree == 3) return from_generators({parse_cycles("(1 2 3)", 3)}, {"c"});
  std::vector<Permutation> gens{parse_cycles("(1 2 3)", degree)};
  std::string cycle = "(";
  if (degree % 2 == 1) {
    for (std::size_t i = 1; i <= degree; ++i) cycle += std::to_string(i) + (i < degree ? " " : ")");
  } else {
    for (std::size_t i = 2; i <= degree; ++i) cycle += std::to_string(i) + (i < degree ? " " : ")");
  }
  gens.push_back(parse_cycles(cycle, degree));
  return from_generators(gens, {"t", "c"});
}

FiniteGroup quaternion8() {
  // Units ±1, ±i, ±j, ±k as sign*4 + unit, unit 0..3 = 1, i, j, k.
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [](int a, int b) {
    const int sign = (a / 4) ^ (b / 4) ^ unit_sign[a % 4][b % 4];
    return sign * 4 + unit_product[a % 4][b % 4];
  };
  auto right_by = [&](int q) {
    Permutation p(8);
    for (int e = 0; e < 8; ++e) p[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(mul(e, q));
    return p;
  };
  return from_generators({right_by(1), right_by(2)}, {"i", "j"});
}

FiniteGroup dicyclic12() {
  const auto c3 = cyclic(3, "y");
  const auto c4 = cyclic(4, "z");
  ActionSpec act{&c4, &c3, {inversion_on(c3)}};
  return semidirect_product(c3, c4, act);
}

Fingerprint fingerprint(const FiniteGroup& g) { return {g.order(), is_abelian(g), exponent(g)}; }

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, std::string recipe, std::function<FiniteGroup()> build, Fingerprint fp) {
    out.push_back({name, std::move(recipe),
                   [name, build = std::move(build)] { return name_generators(name, build()); }, fp});
  };

  for (std::size_t n = 1; n <= 32; ++n)
    add("C" + std::to_string(n), "cyclic(" + std::to_string(n) + ")", [n] { return cyclic(n); }, {n, true, n});

  for (std::uint64_t p : {2U, 3U, 5U})
    for (std::size_t rank = 2; rank <= 4; ++rank) {
      std::size_t order = 1;
      for (std::size_t i = 0; i < rank; ++i) order *= p;
      add("C" + std::to_string(p) + "^" + std::to_string(rank),
          "elementary_abelian(" + std::to_string(p) + ", " + std::to_string(rank) + ")",
          [p, rank] { return elementary_abelian(p, rank); }, {order, true, p});
    }

  for (std::size_t n = 3; n <= 16; ++n)
    add("D" + std::to_string(2 * n), "dihedral(" + std::to_string(n) + ")", [n] { return dihedral(n); },
        {2 * n, false, std::lcm(n, std::size_t{2})});

  add("S3", "symmetric(3)", [] { return symmetric(3); }, {6, false, 6});
  add("A4", "alternating(4)", [] { return alternating(4); }, {12, false, 6});
  add("Dic12", "dicyclic12()", [] { return dicyclic12(); }, {12, false, 12});
  add("Q8", "quaternion8()", [] { return quaternion8(); }, {8, false, 4});
  add("S4", "symmetric(4)", [] { return symmetric(4); }, {24, false, 12});
  add("A5", "alternating(5)", [] { return alternating(5); }, {60, false, 30});
  add("Hol5", "holomorph_cyclic(5)", [] { return holomorph_cyclic(5); }, {20, false, 20});
  add("Hol7", "holomorph_cyclic(7)", [] { return holomorph_cyclic(7); }, {42, false, 42});
  add("Hol8", "holomorph_cyclic(8)", [] { return holomorph_cyclic(8); }, {32, false, 8});

  add("S3xC2", "direct_product(symmetric(3), cyclic(2))", [] { return direct_product(symmetric(3), cyclic(2, "z")); },
      {12, false, 6});
  add("S3xC3", "direct_product(symmetric(3), cyclic(3))", [] { return direct_product(symmetric(3), cyclic(3, "z")); },
      {18, false, 6});
  add("C2xD8", "direct_product(cyclic(2), dihedral(4))", [] { return direct_product(cyclic(2, "z"), dihedral(4)); },
      {16, false, 4});
  add("Q8xC2", "direct_product(quaternion8(), cyclic(2))", [] { return direct_product(quaternion8(), cyclic(2, "z")); },
      {16, false, 4});
  add("A4xC2", "direct_product(alternating(4), cyclic(2))", [] { return direct_product(alternating(4), cyclic(2, "z")); },
      {24, false, 6});
  add("C2^2xS3", "direct_product(elementary_abelian(2, 2), symmetric(3))",
      [] { return direct_product(elementary_abelian(2, 2), symmetric(3)); }, {24, false, 6});
  add("S3xS3", "direct_product(symmetric(3), symmetric(3))", [] { return direct_product(symmetric(3), symmetric(3)); },
      {36, false, 6});

  out.push_back({"holomorph8", "holomorph8_group()", [] { return holomorph8_group(); }, {32, false, 8}});
  out.push_back({"example2", "example_group(2)", [] { return example_group(2); }, {32, false, 4}});
  out.push_back({"example3", "example_group(3)", [] { return example_group(3); }, {243, false, 9}});
  add("C2xexample2", "direct_product(cyclic(2), example_group(2))",
      [] { return direct_product(cyclic(2, "z"), example_group(2).group); }, {64, false, 4});
  return out;
}

NamedGroup build_recipe(const std::string& recipe, std::uint64_t p, std::size_t n, std::size_t max_order) {
  if (recipe == "holomorph8" || recipe == "theorem4") return holomorph8_group();
  if (recipe == "example") return example_group(p, max_order);
  if (recipe == "cyclic") return name_generators("C" + std::to_string(n), cyclic(n));
  if (recipe == "dihedral") return name_generators("D" + std::to_string(2 * n), dihedral(n));
  if (recipe == "elementary")
    return name_generators("C" + std::to_string(p) + "^" + std::to_string(n), elementary_abelian(p, n));
  if (recipe == "symmetric") return name_generators("S" + std::to_string(n), symmetric(n));
  if (recipe == "alternating") return name_generators("A" + std::to_string(n), alternating(n));
  if (recipe == "quaternion") return name_generators("Q8", quaternion8());
  if (recipe == "dicyclic12") return name_generators("Dic12", dicyclic12());
  if (recipe == "holomorph") return name_generators("Hol" + std::to_string(n), holomorph_cyclic(n));
  for (const auto& entry : catalog())
    if (entry.name == recipe) return entry.build();
  throw PreconditionError("unknown recipe \"" + recipe + "\"");
}

}  // namespace complementa
