#include <doctest.h>

#include "complementa/examples.hpp"
#include "complementa/lattice.hpp"
#include "complementa/series.hpp"
#include "oracles.hpp"

using namespace complementa;

TEST_SUITE("series") {
  TEST_CASE("commutator subgroups match the all-pairs oracle") {
    for (const auto& entry : catalog()) {
      const auto ng = entry.build();
      const auto& g = ng.group;
      if (g.order() > 64) continue;
      CAPTURE(entry.name);
      const auto whole = whole_group(g);
      const auto all = oracle::members(whole);
      CHECK(oracle::members(commutator_subgroup(g, whole, whole)) == oracle::commutator(g, all, all));
      const auto d = derived_length(g);
      const int want = oracle::derived_length(g, all);
      if (want < 0)
        CHECK_FALSE(d.has_value());
      else
        CHECK(d == static_cast<std::size_t>(want));
    }
  }

  TEST_CASE("derived series examples") {
    CHECK(derived_length(cyclic(1)) == 0u);
    CHECK(derived_length(cyclic(6)) == 1u);
    CHECK(derived_length(symmetric(3)) == 2u);
    CHECK(derived_length(symmetric(4)) == 3u);
    CHECK_FALSE(derived_length(alternating(5)).has_value());
    const auto ng = holomorph8_group();
    const auto whole = whole_group(ng.group);
    const auto derived = commutator_subgroup(ng.group, whole, whole);
    CHECK(derived == ng.subgroup("x2"));
    CHECK(derived.order() == 4);

    const auto s = derived_series(symmetric(4));
    CHECK(s.kind == SeriesKind::derived);
    CHECK(s.terms.front().order() == 24);
    CHECK(s.terms.back().is_trivial());
    for (std::size_t i = 1; i < s.terms.size(); ++i) {
      CHECK(s.terms[i].order() < s.terms[i - 1].order());
      CHECK(s.terms[i].is_subgroup_of(s.terms[i - 1]));
    }
    const auto a5 = derived_series(alternating(5));
    CHECK_FALSE(a5.length.has_value());
    CHECK(a5.terms.back().order() == 60);
  }

  TEST_CASE("centre and nilpotency") {
    const auto c6 = cyclic(6);
    CHECK(center(c6) == whole_group(c6));
    CHECK(is_nilpotent(c6));
    CHECK(is_nilpotent(holomorph8_group().group));
    const auto s3 = symmetric(3);
    CHECK_FALSE(is_nilpotent(s3));
    CHECK(center(s3).is_trivial());
    CHECK(center(quaternion8()).order() == 2);
    const auto lcs = lower_central_series(dihedral(4));
    CHECK(lcs.kind == SeriesKind::lower_central);
    CHECK(lcs.length == 2u);
  }

  TEST_CASE("Frattini subgroups") {
    CHECK(frattini(elementary_abelian(3, 2)).is_trivial());
    const auto c8 = cyclic(8);
    const auto phi = frattini(c8);
    CHECK(phi.order() == 4);
    CHECK(phi.contains(2));
    CHECK(frattini(cyclic(1)).is_trivial());
    CHECK(frattini(quaternion8()).order() == 2);
    CHECK(frattini(symmetric(4)).is_trivial());
  }

  TEST_CASE("Sylow subgroups") {
    const auto s3 = symmetric(3);
    const auto lattice = all_subgroups(s3);
    CHECK(sylow_subgroup(s3, lattice, 5).is_trivial());
    CHECK(sylow_subgroup(s3, lattice, 2).order() == 2);
    CHECK(sylow_subgroups(s3, lattice, 2).size() == 3);
    CHECK(sylow_subgroups(s3, lattice, 3).size() == 1);
    CHECK_THROWS_AS(sylow_subgroup(s3, lattice, 4), PreconditionError);

    const auto ng = holomorph8_group();
    const auto hl = all_subgroups(ng.group);
    CHECK(sylow_subgroup(ng.group, hl, 2) == whole_group(ng.group));

    const auto s4 = symmetric(4);
    const auto sl = all_subgroups(s4);
    CHECK(sylow_subgroups(s4, sl, 2).size() == 3);
    CHECK(sylow_subgroups(s4, sl, 3).size() == 4);
    const auto c = sl.subgroups[sl.of_order(2).back()];
    const auto containing = sylow_subgroup(s4, sl, 2, &c);
    CHECK(c.is_subgroup_of(containing));
    CHECK(p_subgroups(s4, sl, 3).size() == 5);
  }

  TEST_CASE("minimal normal subgroups and chief series") {
    const auto c7 = cyclic(7);
    const auto mn = minimal_normal_subgroups(c7);
    REQUIRE(mn.size() == 1);
    CHECK(mn.front() == whole_group(c7));
    CHECK(minimal_normal_subgroups(elementary_abelian(2, 2)).size() == 3);
    CHECK(minimal_normal_subgroups(cyclic(1)).empty());
    CHECK(minimal_normal_subgroups(symmetric(4)).size() == 1);

    const auto ng = holomorph8_group();
    const auto chief = chief_series(ng.group);
    CHECK(chief.kind == SeriesKind::chief);
    CHECK(chief.terms.front().order() == 32);
    CHECK(chief.terms.back().is_trivial());
    for (const auto& f : chief.factors) {
      CHECK((f.order == 2 || f.order == 4));
      CHECK(f.elementary_abelian);
    }
    for (const auto& t : chief.terms) CHECK(is_normal(ng.group, t));

    const auto s4 = chief_series(symmetric(4));
    std::vector<std::size_t> orders;
    for (const auto& f : s4.factors) orders.push_back(f.order);
    CHECK(orders == std::vector<std::size_t>{2, 3, 4});
  }

  TEST_CASE("normalizers") {
    const auto s3 = symmetric(3);
    const auto lattice = all_subgroups(s3);
    const auto& t = lattice.subgroups[lattice.of_order(2).front()];
    CHECK(normalizer(s3, t) == t);
    CHECK(normalizer(s3, lattice.subgroups[lattice.of_order(3).front()]) == whole_group(s3));
    CHECK(normalizer(s3, trivial_subgroup(s3)) == whole_group(s3));
  }

  TEST_CASE("series invariants over the catalog") {
    for (const auto& entry : catalog()) {
      const auto ng = entry.build();
      const auto& g = ng.group;
      if (g.order() > 64) continue;
      CAPTURE(entry.name);
      const auto lattice = all_subgroups(g);
      const auto d = derived_length(g);
      if (d) {
        for (const auto& f : chief_series(g).factors) CHECK(f.elementary_abelian);
      }
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!lattice.normal[i]) continue;
        const auto dq = derived_length(quotient(g, lattice.subgroups[i]).group);
        if (d) CHECK((dq && *dq <= *d));
      }
      CHECK(is_normal(g, frattini(g, lattice)));
      for (std::uint64_t p : primes_of(g)) {
        const auto syl = sylow_subgroups(g, lattice, p);
        std::size_t part = 1;
        for (std::size_t n = g.order(); n % p == 0; n /= p) part *= p;
        CHECK(syl.front().order() == part);
        CHECK(syl.size() % p == 1);
      }
    }
  }
}
