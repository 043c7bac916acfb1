#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrank/arith.hpp"

namespace qrank {

/* Truncated Laurent series over exact rationals.
 *
 * A series knows every coefficient at exponents strictly below `order` and
 * stores them densely on [valuation, order); coefficients below the stored
 * valuation are exact zeros (a Laurent series vanishes below its valuation),
 * coefficients at or above `order` are unknown and asking for one is a
 * WindowError. Windows always satisfy valuation < order. Operations
 * propagate windows pessimistically:
 *
 *   add/sub:  valuation = min(v_A, v_B),        order = min(o_A, o_B)
 *   mul:      valuation = v_A + v_B,            order = min(o_A + v_B, o_B + v_A)
 *   inverse:  valuation = -v_A,                 order = o_A - 2 v_A
 *   substitute_power(m): valuation = m v_A,     order = m o_A
 *     (exponents not divisible by m are known zeros, so everything below
 *      m*o_A is determined; this is the tightest sound rule and the
 *      dissection-completeness property depends on it)
 *   extract_progression(r, m): index n of the result is the coefficient at
 *     exponent m n + r; valuation = ceil((v_A - r)/m), order = ceil((o_A - r)/m)
 *
 * All arithmetic is exact; there is no floating point anywhere. */
class LaurentSeries {
 public:
  /* Zero series with the given window. Requires valuation < order. */
  LaurentSeries(long valuation, long order);

  /* c * q^k known through `order`. Requires k < order. */
  static LaurentSeries monomial(const Rat& c, long k, long order);

  /* Dense construction: coefficient at valuation + i is coeffs[i]. */
  static LaurentSeries from_coeffs(long valuation, std::vector<Rat> coeffs);
  static LaurentSeries zero(long order) { return LaurentSeries(0, order); }
  static LaurentSeries one(long order) { return monomial(1, 0, order); }

  long valuation() const { return val_; }
  long order() const { return order_; }

  /* Coefficient at exponent n: exact zero below the valuation, stored value
   * inside the window, WindowError for n >= order. */
  const Rat& coeff(long n) const;

  /* In-window mutation (stored window only; WindowError otherwise). */
  void set_at(long n, const Rat& value);
  void add_at(long n, const Rat& delta);

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  LaurentSeries scaled(const Rat& c) const;
  /* Multiply by q^k (exact; shifts the window). */
  LaurentSeries shifted(long k) const;

  /* Reciprocal. The coefficient at the *stored* valuation must be nonzero
   * (leading known zeros are not skipped; see tightened()). */
  LaurentSeries inverse() const;

  /* q -> q^m, m >= 1. */
  LaurentSeries substitute_power(long m) const;

  /* Coefficients along exponents r, r+m, r+2m, ... as a new series in q.
   * Requires 0 <= r < m and r < order (so at least index 0 or a known zero
   * window exists). */
  LaurentSeries extract_progression(long r, long m) const;

  /* Restrict the window: forget everything at or above new_order. */
  LaurentSeries truncated(long new_order) const;

  /* Drop leading known zeros so the stored valuation carries a nonzero
   * coefficient (no-op on the zero series). */
  LaurentSeries tightened() const;

  bool is_zero() const;

  struct Mismatch {
    long exponent;
    Rat lhs, rhs;
  };

  /* First differing coefficient at exponents < below, or nullopt if equal.
   * Both windows must reach `below` (WindowError otherwise). Comparison
   * starts at min(valuation) — below that, both sides are exact zeros. */
  static std::optional<Mismatch> first_mismatch(const LaurentSeries& a,
                                                const LaurentSeries& b,
                                                long below);
  static bool eq_upto(const LaurentSeries& a, const LaurentSeries& b, long below);

  /* Human-readable dump "c0*q^v + ...", zero terms skipped (debugging, CLI). */
  std::string to_string(long max_terms = 16) const;

 private:
  long val_;
  long order_;
  std::vector<Rat> c_;  // c_[i] is the coefficient at exponent val_ + i

  Rat& at(long n) { return c_[static_cast<size_t>(n - val_)]; }
  const Rat& at(long n) const { return c_[static_cast<size_t>(n - val_)]; }
};

}  // namespace qrank
