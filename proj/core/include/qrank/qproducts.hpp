#pragma once

#include <vector>

#include "qrank/series.hpp"

namespace qrank {

/* One Pochhammer argument: the pair (sign, e) denotes a = sign * q^e, taken
 * against base q^b, so the i-th factor of the product is (1 - sign*q^(e+ib)).
 * sign=+1, e=0 is rejected outright: the infinite product would vanish. */
struct ProductAtom {
  int sign;  // +1 or -1
  long e;    // exponent of q in the argument, >= 0
  long b;    // base exponent, >= 1

  ProductAtom(int sign_, long e_, long b_);
};

/* (a; q^b)_n — the first n factors. n >= 0. */
LaurentSeries pochhammer_finite(const ProductAtom& a, long n, long order);

/* (a; q^b)_inf truncated at `order`: factors with e + i b >= order multiply
 * the window by 1 and are skipped. */
LaurentSeries pochhammer_infinite(const ProductAtom& a, long order);

/* J(b)      = (q^b; q^b)_inf
 * Jab(a,b)  = (q^a; q^b)_inf (q^(b-a); q^b)_inf (q^b; q^b)_inf, 0 < a < b
 * Lab(a,b)  = J(b)^2 / Jab(a,b); its coefficients are nonnegative. */
LaurentSeries J(long b, long order);
LaurentSeries Jab(long a, long b, long order);
LaurentSeries Lab(long a, long b, long order);

/* Bilateral theta sum  sum_{n in Z} q^(A2 n^2 + A1 n), A2 > 0. Every n whose
 * exponent lands below `order` must give a nonnegative integer exponent
 * (checked as terms are generated; DomainError otherwise). */
LaurentSeries theta_sum(const Rat& A2, const Rat& A1, long order);

/* Product form of the same sum via the triple product
 *   sum q^(A2 n^2 + A1 n) = (-q^(A2+A1); q^(2 A2)) (-q^(A2-A1); q^(2 A2)) (q^(2 A2); q^(2 A2)),
 * valid when A2+A1, A2-A1 and 2 A2 are integers (checked). Kept as a separate
 * route so the two sides can be played against each other in tests. */
LaurentSeries theta_product(const Rat& A2, const Rat& A1, long order);

/* A quotient of Pochhammer-type products times coeff * q^shift:
 *
 *   coeff * q^shift * prod_i atom_i ^ power_i
 *
 * Negative powers divide. Evaluation works one binomial factor at a time
 * (O(order) per factor), never through generic series inversion, so big
 * eta-quotients at order ~1000 stay cheap. */
struct ProductExpr {
  /* One multiplicand: the full infinite product of `atom` when infinite,
   * otherwise the single binomial (1 - sign*q^e). */
  struct Factor {
    int sign;
    long e;
    long b;
    int power;
    bool infinite;
  };

  Rat coeff = 1;
  long shift = 0;
  std::vector<Factor> factors;

  ProductExpr& mul(const ProductAtom& a, int power = 1);
  /* Append all atoms of J(b) / Jab(a,b) / Lab(a,b) raised to `power`. */
  ProductExpr& mul_J(long b, int power = 1);
  ProductExpr& mul_Jab(long a, long b, int power = 1);
  ProductExpr& mul_Lab(long a, long b, int power = 1);
  /* (1 - q^e)^power as a standalone binomial. */
  ProductExpr& mul_binom(long e, int power = 1);

  LaurentSeries eval(long order) const;
};

/* In-place binomial passes on the dense coefficient window of s, both exact:
 * multiply by (1 - sign*q^e) or divide by it. Exposed for tests. */
LaurentSeries mul_binomial(const LaurentSeries& s, int sign, long e);
LaurentSeries div_binomial(const LaurentSeries& s, int sign, long e);

}  // namespace qrank
