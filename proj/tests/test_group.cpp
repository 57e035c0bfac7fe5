#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "complementa/examples.hpp"
#include "complementa/group.hpp"
#include "complementa/lattice.hpp"
#include "oracles.hpp"

using namespace complementa;

namespace {

std::vector<std::uint32_t> cycle_perm(std::size_t degree, std::initializer_list<std::uint32_t> cycle) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::uint32_t> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

Permutation identity_on(const FiniteGroup& g) {
  Permutation p(g.order());
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("from_generators matches the permutation closure oracle") {
    CHECK(from_generators({parse_cycles("(1 2)", 2)}).order() == 2);
    CHECK(from_generators({}).order() == 1);

    const std::vector<std::vector<std::uint32_t>> s3{cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})};
    const auto g = from_generators({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
    const auto want = oracle::permutation_closure(s3);
    CHECK(g.order() == 6);
    CHECK(want.order == 6);
    CHECK_FALSE(is_abelian(g));
    CHECK(exponent(g) == want.exponent);

    const std::vector<std::vector<std::uint32_t>> s5{cycle_perm(5, {0, 1}), cycle_perm(5, {0, 1, 2, 3, 4})};
    const auto big = from_generators({parse_cycles("(1 2)", 5), parse_cycles("(1 2 3 4 5)", 5)});
    const auto fp = oracle::permutation_closure(s5);
    CHECK(big.order() == fp.order);
    CHECK(exponent(big) == fp.exponent);
  }

  TEST_CASE("from_generators numbering is deterministic") {
    const std::vector<Permutation> gens{parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)};
    const auto a = from_generators(gens, {"r", "s"});
    const auto b = from_generators(gens, {"r", "s"});
    CHECK(a == b);
    CHECK(std::equal(a.labels().begin(), a.labels().end(), b.labels().begin()));
    CHECK(a.label(0) == "e");
    CHECK(a.label(a.generators()[0]) == "r");
  }

  TEST_CASE("cycle notation errors") {
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), PreconditionError);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), PreconditionError);
    CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), PreconditionError);
  }

  TEST_CASE("construction cap") {
    CHECK_THROWS_AS(from_generators({parse_cycles("(1 2)", 7), parse_cycles("(1 2 3 4 5 6 7)", 7)}, {}, 1000),
                    CapExceeded);
    try {
      (void)direct_product(cyclic(100), cyclic(100));
      FAIL("expected a cap error");
    } catch (const CapExceeded& e) {
      CHECK(e.cap_name() == "construction");
      CHECK(e.cap() == Limits::construction);
    }
  }

  TEST_CASE("cyclic groups") {
    CHECK(cyclic(1).order() == 1);
    CHECK(cyclic(1).generators().empty());
    const auto c8 = cyclic(8);
    CHECK(c8.generators()[0] == 1);
    CHECK(element_order(c8, 1) == 8);
    const auto c4 = cyclic(4);
    std::vector<std::size_t> orders;
    for (Element e = 0; e < 4; ++e) orders.push_back(element_order(c4, e));
    CHECK(orders == std::vector<std::size_t>{1, 4, 2, 4});
  }

  TEST_CASE("direct products") {
    const auto v4 = direct_product(cyclic(2, "a"), cyclic(2, "b"));
    CHECK(v4.order() == 4);
    CHECK(is_elementary_abelian(v4));
    const auto e8 = direct_product(v4, cyclic(2, "c"));
    CHECK(e8.order() == 8);
    CHECK(exponent(e8) == 2);
    CHECK(direct_product(cyclic(3), symmetric(3)).order() == 18);
  }

  TEST_CASE("semidirect product with trivial action equals the direct product") {
    const auto n = dihedral(3);
    const auto h = cyclic(4, "z");
    std::vector<Permutation> images(h.generators().size(), identity_on(n));
    const ActionSpec act{&h, &n, images};
    CHECK(semidirect_product(n, h, act) == direct_product(n, h));
  }

  TEST_CASE("semidirect product of C8 by inversion is dihedral of order 16") {
    const auto g = dihedral(8);
    const auto fp = oracle::permutation_closure(
        {cycle_perm(8, {0, 1, 2, 3, 4, 5, 6, 7}),
         [] {
           std::vector<std::uint32_t> p(8);
           for (std::uint32_t i = 0; i < 8; ++i) p[i] = (8 - i) % 8;
           return p;
         }()});
    CHECK(g.order() == 16);
    CHECK(fp.order == 16);
    CHECK(exponent(g) == fp.exponent);
    CHECK(is_abelian(g) == fp.abelian);
    const Element r = g.generators()[0];
    const Element s = g.generators()[1];
    CHECK(g.conj(r, s) == g.inv(r));
  }

  TEST_CASE("semidirect product rejects bad actions") {
    const auto c5 = cyclic(5);
    const auto c2 = cyclic(2, "t");
    Permutation not_auto = identity_on(c5);
    std::swap(not_auto[1], not_auto[2]);
    CHECK_THROWS_AS(semidirect_product(c5, c2, ActionSpec{&c2, &c5, {not_auto}}), InvalidStructure);

    // x -> x^2 has order 4 in Aut(C5), so it cannot be the image of an involution.
    const std::array<Element, 1> square{c5.pow(1, 2)};
    const auto sq = automorphism_from_images(c5, square);
    CHECK_THROWS_AS(semidirect_product(c5, c2, ActionSpec{&c2, &c5, {sq}}), InvalidStructure);
    const auto c4 = cyclic(4, "t");
    const auto hol5 = semidirect_product(c5, c4, ActionSpec{&c4, &c5, {sq}});
    CHECK(hol5.order() == 20);
  }

  TEST_CASE("orders multiply") {
    const auto ng = example_group(2);
    CHECK(ng.group.order() == 32);
    CHECK(holomorph8_group().group.order() == 32);
    CHECK(direct_product(cyclic(6), dihedral(5)).order() == 60);
  }

  TEST_CASE("quotients") {
    const auto g = holomorph8_group();
    const auto& G = g.group;
    CHECK(quotient(G, whole_group(G)).group.order() == 1);

    const auto same = quotient(G, trivial_subgroup(G));
    CHECK(same.group.order() == 32);
    std::vector<Element> sorted = same.projection;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    const auto q = quotient(G, g.subgroup("x2"));
    CHECK(q.group.order() == 8);
    CHECK(is_elementary_abelian(q.group));
    for (Element a = 0; a < G.order(); ++a)
      for (Element b = 0; b < G.order(); ++b)
        REQUIRE(q.projection[G.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));

    CHECK_THROWS_AS(quotient(G, g.subgroup("a")), PreconditionError);
  }

  TEST_CASE("element orders, exponent and primes") {
    const auto triv = cyclic(1);
    CHECK(element_order(triv, 0) == 1);
    CHECK(primes_of(triv).empty());
    CHECK(primes_of(symmetric(3)) == std::set<std::uint64_t>{2, 3});
    CHECK(primes_of(holomorph8_group().group) == std::set<std::uint64_t>{2});
    CHECK(exponent(holomorph8_group().group) == 8);
    CHECK(exponent(elementary_abelian(2, 3)) == 2);
  }

  TEST_CASE("table audit rejects broken tables") {
    // Row 1 repeats an entry.
    CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}, {1}), InvalidStructure);
    // Identity not at 0.
    CHECK_THROWS_AS(FiniteGroup::from_table(2, {1, 0, 0, 1}, {1}), InvalidStructure);
    // Latin square on 5 points that is not associative.
    const std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup::from_table(5, loop, {1, 2}), InvalidStructure);
    // Generator does not generate.
    const auto c4 = cyclic(4);
    std::vector<Element> t(c4.table().begin(), c4.table().end());
    CHECK_THROWS_AS(FiniteGroup::from_table(4, t, {2}), InvalidStructure);
    CHECK_NOTHROW(FiniteGroup::from_table(4, t, {1}));
  }

  TEST_CASE("every catalog group passes the table audit and matches the fingerprint oracle") {
    for (const auto& entry : catalog()) {
      CAPTURE(entry.name);
      const auto ng = entry.build();
      const auto fp = oracle::table_fingerprint(ng.group);
      CHECK(fp.order == entry.expected.order);
      CHECK(fp.abelian == entry.expected.abelian);
      CHECK(fp.exponent == entry.expected.exponent);
    }
  }

  TEST_CASE("words") {
    const auto g = holomorph8_group().group;
    const Element x = g.generators()[0];
    const Element a = g.generators()[1];
    CHECK(g.evaluate("e") == 0);
    CHECK(g.evaluate("x^2*a") == g.mul(g.mul(x, x), a));
    CHECK(g.evaluate("xa") == g.mul(x, a));
    CHECK(g.evaluate("x^-1 a") == g.mul(g.inv(x), a));
    CHECK_THROWS_AS(g.evaluate("y"), PreconditionError);
    const std::array<std::size_t, 3> word{0, 0, 1};
    const std::array<std::string, 2> names{"x", "a"};
    CHECK(format_word(word, names) == "x^2*a");
    CHECK(format_word({}, names) == "e");
  }

  TEST_CASE("holomorphs of cyclic groups") {
    CHECK(holomorph_cyclic(1).order() == 1);
    const auto h3 = holomorph_cyclic(3);
    CHECK(h3.order() == 6);
    CHECK_FALSE(is_abelian(h3));
    CHECK(fingerprint(holomorph_cyclic(8)) == fingerprint(holomorph8_group().group));
  }
}
