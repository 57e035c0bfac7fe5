#include "complementa/bounds.hpp"

#include <bit>
#include <cmath>

#include "complementa/error.hpp"
#include "complementa/group.hpp"

namespace complementa {

std::int64_t guarded_floor(long double x) { return static_cast<std::int64_t>(std::floor(x + floor_guard)); }

namespace {

bool is_power_of_two(std::uint64_t m) { return m != 0 && (m & (m - 1)) == 0; }

// floor(m·log₂m) with the integer part split off so long double keeps ~1e-12 absolute precision.
std::uint64_t floor_m_log2_m(std::uint64_t m) {
  if (is_power_of_two(m)) return m * static_cast<std::uint64_t>(std::countr_zero(m));
  return static_cast<std::uint64_t>(guarded_floor(static_cast<long double>(m) * std::log2(static_cast<long double>(m))));
}

}  // namespace

std::uint64_t chief_factor_rank(std::uint64_t m) {
  if (m == 0) throw PreconditionError("m must be at least 1");
  if (m == 1) return 1;
  return m * (m - 1) + floor_m_log2_m(m);
}

long double rank_log_fraction(std::uint64_t m) {
  if (is_power_of_two(m)) return 0.0L;
  const long double v = static_cast<long double>(m) * std::log2(static_cast<long double>(m));
  return v - std::floor(v);
}

long double log9_term(std::uint64_t n) {
  const long double x = static_cast<long double>(n - 2) / 8.0L;
  return 5.0L * std::log(x) / std::log(9.0L);
}

std::uint64_t linear_derived_length_bound(std::uint64_t n) {
  if (n == 0) throw PreconditionError("n must be at least 1");
  if (n <= 6) return 2 * n;
  if (n <= 73) return 14;
  return static_cast<std::uint64_t>(guarded_floor(log9_term(n) + 10.0L));
}

DerivedLengthBound derived_length_bound(std::uint64_t m) {
  if (m == 0) throw PreconditionError("m must be at least 1");
  if (m == 1) return {2.0L, 2};
  if (m == 2) return {11.0L, 11};
  if (m < 8) return {18.0L, 18};
  const long double v = log9_term(chief_factor_rank(m)) + 13.0L;
  return {v, guarded_floor(v)};
}

std::uint64_t general_derived_length_bound(std::uint64_t m) {
  return linear_derived_length_bound(chief_factor_rank(m)) + 3;
}

BigInt minimal_normal_order_bound(std::uint64_t q, std::uint64_t m) {
  if (!is_prime(q)) throw PreconditionError("q must be prime");
  if (m == 0) throw PreconditionError("m must be at least 1");
  if (m == 1) return BigInt(q);
  // Refuse results past roughly 2^24 bits.
  const long double bits = static_cast<long double>(m - 1) * m * std::log2(static_cast<long double>(q)) +
                           m * std::log2(static_cast<long double>(m));
  if (bits > static_cast<long double>(max_bound_bits)) throw CapExceeded("bound size", max_bound_bits);
  const auto e = static_cast<unsigned>((m - 1) * m);
  return boost::multiprecision::pow(BigInt(q), e) * boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(m));
}

BigInt factorial_index_bound(std::uint64_t m) {
  if (m == 0) throw PreconditionError("m must be at least 1");
  if (m > max_factorial_argument) throw CapExceeded("factorial argument", max_factorial_argument);
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f *= i;
  return f;
}

BoundReport bound_report(std::uint64_t m, std::optional<std::uint64_t> q) {
  BoundReport r;
  r.m = m;
  r.n = chief_factor_rank(m);
  r.zeta_n = linear_derived_length_bound(r.n);
  r.d_bound = derived_length_bound(m);
  r.general_d_bound = r.zeta_n + 3;
  if (m <= max_factorial_argument) r.factorial = factorial_index_bound(m);
  if (q) {
    r.q = q;
    r.minimal_normal_bound = minimal_normal_order_bound(*q, m);
  }
  return r;
}

}  // namespace complementa
