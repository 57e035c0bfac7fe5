#include <doctest.h>

#include <algorithm>

#include "complementa/examples.hpp"
#include "complementa/lattice.hpp"
#include "oracles.hpp"

using namespace complementa;

namespace {

std::set<oracle::Members> as_sets(const SubgroupLattice& lattice) {
  std::set<oracle::Members> out;
  for (const auto& h : lattice.subgroups) out.insert(oracle::members(h));
  return out;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("generated subgroups") {
    const auto ng = holomorph8_group();
    const auto& g = ng.group;
    CHECK(generated_subgroup(g, std::vector<Element>{}).is_trivial());
    CHECK(ng.subgroup("x").order() == 8);

    const auto ex = example_group(2);
    const std::vector<Element> seed{ex.group.pow(ex.element("x"), 2), ex.element("a")};
    CHECK(oracle::members(generated_subgroup(ex.group, seed)) == oracle::close(ex.group, {seed[0], seed[1]}));
  }

  TEST_CASE("make_subgroup audits closure") {
    const auto g = symmetric(3);
    auto bad = g.empty_set();
    bad.set(0);
    bad.set(1);
    bad.set(2);
    CHECK_THROWS_AS(make_subgroup(g, bad), PreconditionError);
  }

  TEST_CASE("lattice sizes") {
    CHECK(all_subgroups(cyclic(4)).size() == 3);
    CHECK(all_subgroups(symmetric(3)).size() == 6);
    CHECK(all_subgroups(holomorph8_group().group).of_order(16).size() == 7);
    CHECK(all_subgroups(symmetric(4)).size() == 30);
    CHECK(all_subgroups(alternating(5)).size() == 59);
    CHECK_THROWS_AS(all_subgroups(elementary_abelian(5, 4)), CapExceeded);
  }

  TEST_CASE("closure oracle agrees with exhaustive subset enumeration") {
    for (const auto& entry : catalog()) {
      const auto ng = entry.build();
      if (ng.group.order() > 16) continue;
      CAPTURE(entry.name);
      CHECK(oracle::subgroups_by_closure(ng.group) == oracle::subgroups_by_subsets(ng.group));
    }
  }

  TEST_CASE("lattice agrees with the closure oracle up to order 24") {
    for (const auto& entry : catalog()) {
      const auto ng = entry.build();
      if (ng.group.order() > 24) continue;
      CAPTURE(entry.name);
      CHECK(as_sets(all_subgroups(ng.group)) == oracle::subgroups_by_closure(ng.group));
    }
  }

  TEST_CASE("lattice structure") {
    for (const auto& entry : catalog()) {
      const auto ng = entry.build();
      const auto& g = ng.group;
      if (g.order() > 64) continue;
      CAPTURE(entry.name);
      const auto lattice = all_subgroups(g);
      CHECK(lattice.subgroups.front().is_trivial());
      CHECK(lattice.subgroups.back().order() == g.order());
      CHECK(std::is_sorted(lattice.subgroups.begin(), lattice.subgroups.end(), canonical_less));
      std::size_t in_classes = 0;
      for (const auto& cls : lattice.conjugacy_classes) in_classes += cls.size();
      CHECK(in_classes == lattice.size());
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto& h = lattice.subgroups[i];
        CHECK(g.order() % h.order() == 0);
        CHECK(lattice.normal[i] == oracle::is_normal(g, oracle::members(h)));
        for (Element by = 0; by < g.order(); ++by) CHECK(lattice.index_of(conjugate(g, h, by)).has_value());
      }
      // A cover has no subgroup strictly between its ends.
      for (const auto& [lo, hi] : lattice.covers) {
        const auto& a = lattice.subgroups[lo];
        const auto& b = lattice.subgroups[hi];
        CHECK(a.is_subgroup_of(b));
        CHECK(a.order() < b.order());
        for (const auto& k : lattice.subgroups)
          CHECK_FALSE((k.order() > a.order() && k.order() < b.order() && a.is_subgroup_of(k) && k.is_subgroup_of(b)));
      }
    }
  }

  TEST_CASE("overgroups") {
    const auto ng = holomorph8_group();
    const auto& g = ng.group;
    const auto over = overgroups(g, ng.subgroup("x"));
    CHECK(over.size() == 5);
    CHECK(overgroups(g, whole_group(g)).size() == 1);
    const auto lattice = all_subgroups(g);
    CHECK(overgroups(g, trivial_subgroup(g)) == lattice.subgroups);

    for (const auto& entry : catalog()) {
      const auto e = entry.build();
      if (e.group.order() > 128) continue;
      CAPTURE(entry.name);
      const auto lat = all_subgroups(e.group);
      for (const auto& h : lat.subgroups) {
        std::vector<Subgroup> filtered;
        for (const auto& k : lat.subgroups)
          if (h.is_subgroup_of(k)) filtered.push_back(k);
        REQUIRE(overgroups(e.group, h) == filtered);
      }
    }
  }

  TEST_CASE("normality, closures and cores") {
    const auto ex = example_group(2);
    CHECK_FALSE(is_normal(ex.group, ex.subgroup("x")));
    CHECK_FALSE(is_normal(ex.group, ex.subgroup("B")));
    const auto& g = ex.group;
    CHECK(core(g, whole_group(g)) == whole_group(g));
    CHECK(normal_closure(g, trivial_subgroup(g)).is_trivial());
    const auto& x = ex.subgroup("x");
    const auto nc = normal_closure(g, x);
    CHECK(oracle::is_normal(g, oracle::members(nc)));
    CHECK(x.is_subgroup_of(nc));
    const auto cr = core(g, x);
    CHECK(oracle::is_normal(g, oracle::members(cr)));
    CHECK(cr.is_subgroup_of(x));
    auto meet = x;
    for (const auto& c : conjugates(g, x)) meet = intersection(meet, c);
    CHECK(meet == cr);
  }

  TEST_CASE("product sets") {
    const auto s3 = symmetric(3);
    const auto lattice = all_subgroups(s3);
    const auto order2 = lattice.of_order(2);
    REQUIRE(order2.size() == 3);
    const auto ps = product_set(s3, lattice.subgroups[order2[0]], lattice.subgroups[order2[1]]);
    CHECK(ps.elements.count() == 4);
    CHECK_FALSE(ps.is_subgroup);
    const auto& h = lattice.subgroups[order2[0]];
    CHECK(product_set(s3, h, trivial_subgroup(s3)).elements == h.members());

    const auto ng = holomorph8_group();
    CHECK(product_set(ng.group, ng.subgroup("x"), ng.subgroup("D")).elements.count() == 32);

    for (const auto& entry : catalog()) {
      const auto e = entry.build();
      if (e.group.order() > 32) continue;
      CAPTURE(entry.name);
      const auto lat = all_subgroups(e.group);
      for (const auto& a : lat.subgroups)
        for (const auto& b : lat.subgroups) {
          const auto ps2 = product_set(e.group, a, b);
          const auto want = oracle::product(e.group, oracle::members(a), oracle::members(b));
          REQUIRE(ps2.elements.count() == want.size());
          const auto ab = oracle::close(e.group, oracle::Members(want.begin(), want.end()));
          REQUIRE(ps2.is_subgroup == (ab.size() == want.size()));
        }
    }
  }

  TEST_CASE("modular law") {
    const auto ng = holomorph8_group();
    const auto& g = ng.group;
    const auto lattice = all_subgroups(g);
    std::size_t valid = 0;
    for (const auto& a : lattice.subgroups)
      for (const auto& t : lattice.subgroups) {
        if (product_set(g, a, t).elements.count() != g.order()) continue;
        for (const auto& b : lattice.subgroups)
          if (a.is_subgroup_of(b)) {
            ++valid;
            REQUIRE(dedekind_identity_check(g, a, b, t));
          }
      }
    CHECK(valid > 0);
    CHECK_THROWS_AS(dedekind_identity_check(g, ng.subgroup("x"), ng.subgroup("a"), whole_group(g)),
                    PreconditionError);
    CHECK_THROWS_AS(dedekind_identity_check(g, ng.subgroup("a"), ng.subgroup("D"), ng.subgroup("b")),
                    PreconditionError);
    CHECK(dedekind_identity_check(g, trivial_subgroup(g), ng.subgroup("D"), whole_group(g)));
  }

  TEST_CASE("abelian and elementary abelian") {
    CHECK(is_elementary_abelian(cyclic(1)));
    CHECK(is_abelian(cyclic(4)));
    CHECK_FALSE(is_elementary_abelian(cyclic(4)));
    CHECK(is_elementary_abelian(elementary_abelian(3, 3)));
    const auto ng = holomorph8_group();
    CHECK(is_elementary_abelian(quotient(ng.group, ng.subgroup("x2")).group));
    CHECK(is_elementary_abelian(ng.group, ng.subgroup("D")));
    CHECK_FALSE(is_abelian(ng.group));
  }
}
