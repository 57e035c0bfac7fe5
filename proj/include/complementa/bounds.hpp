#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace complementa {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t max_bound_bits = std::uint64_t{1} << 24;
inline constexpr std::uint64_t max_factorial_argument = 10000;

/// Added before every floor of an irrational intermediate.
inline constexpr long double floor_guard = 1e-9L;

/// floor(x + floor_guard).
std::int64_t guarded_floor(long double x);

/**
 * Rank bound for chief factors in a group with a supercomplemented cyclic
 * p-subgroup of order m: 1 when m = 1, else floor(m(m-1) + m·log₂m).
 * m·log₂m is exact when m is a power of two.
 */
std::uint64_t chief_factor_rank(std::uint64_t m);

/// Fractional part of m·log₂m (0 for powers of two), exposed for guard-band checks.
long double rank_log_fraction(std::uint64_t m);

/**
 * Upper estimate for the largest derived length of a solvable linear group
 * of degree n: 2n for n ≤ 6, 14 for 7 ≤ n ≤ 73, and
 * floor(5·log₉((n-2)/8) + 10) beyond. Only an estimate, never the exact value.
 */
std::uint64_t linear_derived_length_bound(std::uint64_t n);

/// 5·log₉((n-2)/8) before any flooring.
long double log9_term(std::uint64_t n);

struct DerivedLengthBound {
  long double value = 0;
  std::int64_t floor = 0;
};

/// 2, 11, 18, or 5·log₉((n-2)/8)+13 for m = 1, m = 2, 2 < m < 8, m ≥ 8.
DerivedLengthBound derived_length_bound(std::uint64_t m);

/// linear_derived_length_bound(chief_factor_rank(m)) + 3.
std::uint64_t general_derived_length_bound(std::uint64_t m);

/**
 * Bound on |Q| for an elementary abelian minimal normal q-subgroup:
 * q when m = 1, otherwise q^{(m-1)m}·m^m. Throws PreconditionError if q is not prime.
 */
BigInt minimal_normal_order_bound(std::uint64_t q, std::uint64_t m);

/// m!, the index bound for a normal elementary abelian subgroup of a p-subgroup.
BigInt factorial_index_bound(std::uint64_t m);

struct BoundReport {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t zeta_n = 2;
  DerivedLengthBound d_bound;
  std::uint64_t general_d_bound = 5;
  std::optional<BigInt> factorial;
  std::optional<std::uint64_t> q;
  std::optional<BigInt> minimal_normal_bound;
};

BoundReport bound_report(std::uint64_t m, std::optional<std::uint64_t> q = std::nullopt);

}  // namespace complementa
