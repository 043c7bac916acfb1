#pragma once

#include <string>
#include <vector>

#include "qrank/series.hpp"

namespace qrank {

/* One unilateral piece of a split bilateral sum:
 *
 *   sign * sum_{n >= n0} sum_{k >= 0} q^(Q(n) + k D(n)),
 *   Q(n) = alpha n^2 + beta n + gamma,  D(n) = delta n + epsilon.
 *
 * Validity (checked on construction): Q is strictly increasing from n0 on
 * (vertex -beta/(2 alpha) <= n0) and D(n) >= 1 for all n >= n0, so the
 * expansion terminates and every exponent is a nonnegative integer. */
struct LambertComponent {
  std::string name;
  int sign;           // +1 or -1
  Rat alpha, beta, gamma;
  long delta, epsilon;
  long n0;

  LambertComponent(std::string name_, int sign_, Rat alpha_, Rat beta_,
                   Rat gamma_, long delta_, long epsilon_, long n0_);

  Int Q(long n) const;  // DomainError if not a nonnegative integer
  long D(long n) const;
};

/* Exact expansion on [0, order): each (n, k) solution adds `sign`. */
LaurentSeries expand_component(const LambertComponent& c, long order);

/* Number of (n, k) pairs with Q(n) + k D(n) = N, n >= n0, k >= 0 — an
 * arithmetic count, no series machinery. Always equals |coeff| above. */
long count_solutions(const LambertComponent& c, const Int& N);

/* A bilateral alternating sum  sum_{n in Z} (-1)^n q^(Q(n)) / (1 + q^(D(n)))
 * with Q(n) = a2 n^2 + a1 n + a0 and D(n) = d1 n + d0. Expanded directly:
 * 1/(1+q^D) = sum_k (-1)^k q^(kD) for D > 0; for D < 0 the term is first
 * rewritten with q^|D|/(1+q^|D|); D = 0 contributes exactly 1/2 * q^Q. This
 * is the route *around* the component split, kept separate so the two can
 * be compared. */
struct BilateralSum {
  Rat a2, a1, a0;  // exponent quadratic
  long d1, d0;     // denominator exponent, linear
};
LaurentSeries bilateral_series(const BilateralSum& s, long order);

/* The four inequality families. Ids are the tags used across the toolkit:
 * "1.4", "1.5", "1.6", "1.7" (rank pairs at 5n / 5n for M2 / 5n+4). */
struct SumSplit {
  std::string family;
  BilateralSum bilateral;
  int bilateral_sign;                      // sign with which the sum enters
  std::vector<LambertComponent> plus_parts;   // expand with sign +1
  std::vector<LambertComponent> minus_parts;  // the a(n)-side, sign -1
};
const SumSplit& family_split(const std::string& id);  // DomainError if unknown

struct SplitCheck {
  bool ok;
  long first_mismatch_exponent;  // valid when !ok
  Rat lhs, rhs;                  // values at the mismatch
};
/* Compare bilateral_series against the signed sum of the family's split
 * components on [0, order). */
SplitCheck verify_split(const std::string& id, long order);

/* Counting bound a(n) <= bound_a(id, n) on the negative side, and the
 * product-side floor b(n) >= bound_b(id, n); both exact integer arithmetic.
 * bound_a uses floor square roots; see component_bound for the per-piece
 * certificates that sum to it. */
Int bound_a(const std::string& id, const Int& n);
Int bound_b(const std::string& id, const Int& n);
/* Upper bound for the number of exponent-N solutions of minus-part i. */
Int component_bound(const std::string& id, size_t i, const Int& N);

/* Smallest n from which bound_b > bound_a holds for good (the threshold
 * used by the pipelines), and the explicit finite range [1, n0) that has to
 * be checked coefficient by coefficient. */
long threshold_n0(const std::string& id);

/* For the "1.4" family the threshold argument runs through a real
 * inequality n/6 > 3 sqrt(n/30) + sqrt(n/20) + 4; decided exactly by two
 * sign-checked squarings (no floating point). */
bool real_threshold_14(const Int& n);

/* c(n) = #{(i, j) >= 0 : 2i + 3j = n} = coefficient of q^n in
 * 1/((1-q^2)(1-q^3)); satisfies c(n) >= floor(n/6). */
long c_coeff(long n);

}  // namespace qrank
