#include "qrank/arith.hpp"

#include <bit>

namespace qrank {

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x < 2) return x;
  /* Newton iteration seeded above the root from the bit length; the iterate
   * decreases monotonically to floor(sqrt(x)). Integer-only. */
  int bits = 64 - std::countl_zero(x);
  std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    std::uint64_t next = (r + x / r) / 2;
    if (next >= r) break;
    r = next;
  }
  while (r > 0 && r > x / r) --r;  // guard against seed undershoot edge cases
  return r;
}

Int isqrt(const Int& x) {
  if (x < 0) throw DomainError("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());  // exact floor sqrt, integer-only
  return r;
}

std::uint64_t isqrt_div_u64(std::uint64_t n, std::uint64_t d) {
  return isqrt_u64(n / d);
}

std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
  return r;
}

long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace qrank
