#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qrank {

using Int = mpz_class;
using Rat = mpq_class;

/* Error taxonomy. WindowError: an operation asked for data outside a series'
 * known window. DomainError: arguments violate a contract (bad modulus, rank
 * of the empty partition, non-integral exponent, ...). NotInvertibleError:
 * reciprocal of a series whose leading stored coefficient is zero.
 * ResourceError: a request that is valid but beyond the documented feasible
 * range (used by the CLI to signal "pick a smaller n"). */
struct WindowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvertibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Exact floor square root, pure integer arithmetic (Newton from a bit-length
 * seed; no floating point enters any bound computation). */
std::uint64_t isqrt_u64(std::uint64_t x);
Int isqrt(const Int& x);

/* floor(sqrt(n/d)) for n >= 0, d >= 1, exact: equals isqrt(n / d) because
 * k^2 <= n/d  <=>  k^2 <= floor(n/d) when k^2 is an integer. */
std::uint64_t isqrt_div_u64(std::uint64_t n, std::uint64_t d);

/* Exact rational <-> string, canonical form "p" or "p/q" with q > 0. */
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

/* floor/ceil of a/b for integers with b > 0. */
long floor_div(long a, long b);
long ceil_div(long a, long b);

}  // namespace qrank
