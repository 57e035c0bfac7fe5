#include <doctest.h>

#include <cmath>

#include "complementa/bounds.hpp"
#include "complementa/error.hpp"
#include "oracles.hpp"

using namespace complementa;

TEST_SUITE("bounds") {
  TEST_CASE("chief factor rank") {
    CHECK(chief_factor_rank(1) == 1);
    CHECK(chief_factor_rank(2) == 4);
    CHECK(chief_factor_rank(8) == 80);
    CHECK(chief_factor_rank(3) == 10);  // 6 + floor(4.754...)
    CHECK(chief_factor_rank(4) == 20);
    CHECK_THROWS_AS(chief_factor_rank(0), PreconditionError);
  }

  TEST_CASE("linear derived length estimate") {
    CHECK(linear_derived_length_bound(4) == 8);
    CHECK(linear_derived_length_bound(6) == 12);
    CHECK(linear_derived_length_bound(7) == 14);
    CHECK(linear_derived_length_bound(73) == 14);
    CHECK(linear_derived_length_bound(80) == 15);
    for (std::uint64_t n = 1; n < 1000000; ++n)
      REQUIRE(linear_derived_length_bound(n) <= linear_derived_length_bound(n + 1));
  }

  TEST_CASE("derived length bound") {
    CHECK(derived_length_bound(1).floor == 2);
    CHECK(derived_length_bound(2).floor == 11);
    for (std::uint64_t m = 3; m < 8; ++m) CHECK(derived_length_bound(m).floor == 18);
    const auto b8 = derived_length_bound(8);
    CHECK(b8.floor == 18);
    CHECK(b8.value > 18.0L);
    CHECK(general_derived_length_bound(2) == 11);
    CHECK(general_derived_length_bound(8) == 18);
  }

  TEST_CASE("minimal normal order bound") {
    CHECK(minimal_normal_order_bound(2, 1) == 2);
    CHECK(minimal_normal_order_bound(7, 1) == 7);
    CHECK(minimal_normal_order_bound(3, 2) == 36);
    CHECK(minimal_normal_order_bound(2, 2) == 16);
    const auto big = minimal_normal_order_bound(2, 8);
    CHECK(big == boost::multiprecision::pow(BigInt(2), 56) * boost::multiprecision::pow(BigInt(8), 8));
    // 2^56 · 8^8 = 2^80: 25 decimal digits.
    const auto digits = big.str().size();
    CHECK(digits == static_cast<std::size_t>(std::floor(80 * std::log10(2.0))) + 1);
    CHECK_THROWS_AS(minimal_normal_order_bound(4, 2), PreconditionError);
    CHECK_THROWS_AS(minimal_normal_order_bound(2, 100000), CapExceeded);
  }

  TEST_CASE("factorials") {
    CHECK(factorial_index_bound(1) == 1);
    CHECK(factorial_index_bound(2) == 2);
    CHECK(factorial_index_bound(8) == 40320);
    CHECK_THROWS_AS(factorial_index_bound(max_factorial_argument + 1), CapExceeded);
  }

  TEST_CASE("bound report") {
    const auto r = bound_report(2, 3);
    CHECK(r.n == 4);
    CHECK(r.zeta_n == 8);
    CHECK(r.d_bound.floor == 11);
    CHECK(r.general_d_bound == 11);
    REQUIRE(r.minimal_normal_bound.has_value());
    CHECK(*r.minimal_normal_bound == 36);
    CHECK_FALSE(bound_report(20000).factorial.has_value());
  }

  TEST_CASE("quad-precision oracle agrees with 50-digit arithmetic") {
    for (std::uint64_t m = 2; m < 200000; m += 997) {
      const auto q = oracle::m_log2_m(m);
      const auto w = oracle::m_log2_m_wide(m);
      CHECK(q.integer == w.integer);
      CHECK(std::fabs(static_cast<double>(q.fraction - w.fraction)) < 1e-20);
      const auto n = chief_factor_rank(m);
      const auto qt = oracle::log9_term(n);
      const auto wt = oracle::log9_term_wide(n);
      CHECK(qt.integer == wt.integer);
      CHECK(std::fabs(static_cast<double>(qt.fraction - wt.fraction)) < 1e-20);
    }
  }

  TEST_CASE("floors are stable under the guard band up to one million") {
    const auto r = oracle::guard_band(1000000);
    CHECK(r.checked == 1000000);
    for (const auto& f : r.failures) FAIL_CHECK(f);
  }
}
