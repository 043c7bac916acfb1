#include "qrank/lambert.hpp"

#include <map>

namespace qrank {

LambertComponent::LambertComponent(std::string name_, int sign_, Rat alpha_,
                                   Rat beta_, Rat gamma_, long delta_,
                                   long epsilon_, long n0_)
    : name(std::move(name_)),
      sign(sign_),
      alpha(std::move(alpha_)),
      beta(std::move(beta_)),
      gamma(std::move(gamma_)),
      delta(delta_),
      epsilon(epsilon_),
      n0(n0_) {
  if (sign != 1 && sign != -1) throw DomainError("component sign must be +-1");
  if (alpha <= 0) throw DomainError("component needs alpha > 0");
  /* Q must increase from n0 on: vertex -beta/(2 alpha) <= n0. */
  if (-beta > 2 * alpha * n0)
    throw DomainError("component " + name + ": Q not increasing from n0");
  if (D(n0) < 1)
    throw DomainError("component " + name + ": D(n0) < 1");
  if (delta < 0)
    throw DomainError("component " + name + ": D must be nondecreasing");
  Q(n0);  // validates integrality of the first exponent
}

Int LambertComponent::Q(long n) const {
  Rat v = alpha * n * n + beta * n + gamma;
  if (v.get_den() != 1)
    throw DomainError("component " + name + ": non-integer exponent at n=" +
                      std::to_string(n));
  if (v < 0)
    throw DomainError("component " + name + ": negative exponent at n=" +
                      std::to_string(n));
  return Int(v.get_num());
}

long LambertComponent::D(long n) const { return delta * n + epsilon; }

LaurentSeries expand_component(const LambertComponent& c, long order) {
  if (order < 1) throw WindowError("order must be >= 1");
  std::vector<Rat> coeffs(static_cast<size_t>(order), Rat(0));
  for (long n = c.n0;; ++n) {
    Int q0 = c.Q(n);
    if (q0 >= order) break;  // Q increases from n0 on, so we are done
    long start = static_cast<long>(q0.get_si());
    long d = c.D(n);
    for (long e = start; e < order; e += d)
      coeffs[static_cast<size_t>(e)] += c.sign;
  }
  return LaurentSeries::from_coeffs(0, std::move(coeffs));
}

long count_solutions(const LambertComponent& c, const Int& N) {
  if (N < 0) return 0;
  long count = 0;
  for (long n = c.n0;; ++n) {
    Int q0 = c.Q(n);
    if (q0 > N) break;
    Int rem = N - q0;
    if (rem % c.D(n) == 0) ++count;
  }
  return count;
}

LaurentSeries bilateral_series(const BilateralSum& s, long order) {
  if (s.a2 <= 0) throw DomainError("bilateral sum needs a2 > 0");
  if (order < 1) throw WindowError("order must be >= 1");
  std::vector<Rat> c(static_cast<size_t>(order), Rat(0));
  /* Walk each arm of n until both Q(n) and Q(n)-D(n) (the exponent after the
   * D<0 rewrite) are past the window and increasing. */
  for (int dir : {+1, -1}) {
    for (long k = (dir > 0 ? 0 : 1);; ++k) {
      long n = dir * k;
      Rat qv = s.a2 * n * n + s.a1 * n + s.a0;
      long d = s.d1 * n + s.d0;
      Rat effective = d < 0 ? qv - d : qv;  // q^Q/(1+q^D) = q^(Q+|D|)/(1+q^|D|)
      if (effective >= order) {
        Rat slope_q = 2 * s.a2 * n + s.a1;
        Rat slope_e = slope_q - s.d1;
        bool past = (dir > 0) ? (slope_q >= 0 && slope_e >= 0)
                              : (slope_q <= 0 && slope_e <= 0);
        if (past) break;
        continue;
      }
      if (effective.get_den() != 1 || effective < 0)
        throw DomainError("bilateral exponent not a nonnegative integer at n=" +
                          std::to_string(n));
      long e0 = static_cast<long>(effective.get_num().get_si());
      int term_sign = (k % 2 == 0) ? +1 : -1;  // (-1)^n with n = dir*k
      if (d == 0) {
        /* 1/(1+q^0) = 1/2 exactly. */
        c[static_cast<size_t>(e0)] += Rat(term_sign) / 2;
        continue;
      }
      long ad = d < 0 ? -d : d;
      int alt = +1;  // 1/(1+q^ad) = sum (-1)^j q^(j*ad)
      for (long e = e0; e < order; e += ad, alt = -alt)
        c[static_cast<size_t>(e)] += term_sign * alt;
    }
  }
  return LaurentSeries::from_coeffs(0, std::move(c));
}

namespace {

SumSplit make_family_14() {
  SumSplit f;
  f.family = "1.4";
  f.bilateral = BilateralSum{Rat(15, 2), Rat(15, 2), Rat(1), 5, 1};
  f.bilateral_sign = +1;
  f.plus_parts = {
      LambertComponent("S1", +1, 30, 15, 1, 20, 2, 0),
      LambertComponent("S2", +1, 30, 55, 22, 20, 12, 0),
      LambertComponent("S3", +1, 30, -5, 0, 20, -2, 1),
      LambertComponent("S4", +1, 30, -25, 4, 20, -12, 1),
  };
  f.minus_parts = {
      LambertComponent("T1", +1, 30, 25, 2, 20, 2, 0),
      LambertComponent("T2", +1, 30, 45, 16, 20, 12, 0),
      LambertComponent("T3", +1, 30, 5, -1, 20, -2, 1),
      LambertComponent("T4", +1, 30, -35, 10, 20, -12, 1),
  };
  return f;
}

SumSplit make_family_15() {
  /* Same bilateral sum as 1.4, entering with a minus sign; the roles of the
   * split pieces swap accordingly. */
  SumSplit f;
  f.family = "1.5";
  f.bilateral = BilateralSum{Rat(15, 2), Rat(15, 2), Rat(1), 5, 1};
  f.bilateral_sign = -1;
  f.plus_parts = {
      LambertComponent("S1", +1, 30, 25, 2, 20, 2, 0),
      LambertComponent("S2", +1, 30, 45, 16, 20, 12, 0),
      LambertComponent("S3", +1, 30, 5, -1, 20, -2, 1),
      LambertComponent("S4", +1, 30, -35, 10, 20, -12, 1),
  };
  f.minus_parts = {
      LambertComponent("T1", +1, 30, 15, 1, 20, 2, 0),
      LambertComponent("T2", +1, 30, 55, 22, 20, 12, 0),
      LambertComponent("T3", +1, 30, -5, 0, 20, -2, 1),
      LambertComponent("T4", +1, 30, -25, 4, 20, -12, 1),
  };
  return f;
}

SumSplit make_family_16() {
  SumSplit f;
  f.family = "1.6";
  f.bilateral = BilateralSum{Rat(10), Rat(5), Rat(0), 10, 2};
  f.bilateral_sign = +1;
  f.plus_parts = {
      LambertComponent("S1", +1, 40, 10, 0, 40, 4, 0),
      LambertComponent("S2", +1, 40, 70, 27, 40, 24, 0),
      LambertComponent("S3", +1, 40, 10, -2, 40, -4, 1),
      LambertComponent("S4", +1, 40, -10, -9, 40, -24, 1),
  };
  f.minus_parts = {
      LambertComponent("T1", +1, 40, 30, 2, 40, 4, 0),
      LambertComponent("T2", +1, 40, 50, 15, 40, 24, 0),
      LambertComponent("T3", +1, 40, 30, -4, 40, -4, 1),
      LambertComponent("T4", +1, 40, -30, 3, 40, -24, 1),
  };
  return f;
}

SumSplit make_family_17() {
  SumSplit f;
  f.family = "1.7";
  f.bilateral = BilateralSum{Rat(10), Rat(15), Rat(4), 10, 6};
  f.bilateral_sign = +1;
  f.plus_parts = {
      LambertComponent("S1", +1, 40, 30, 4, 40, 12, 0),
      LambertComponent("S2", +1, 40, 90, 45, 40, 32, 0),
      LambertComponent("S3", +1, 40, -10, -2, 40, -12, 1),
      LambertComponent("S4", +1, 40, -30, -3, 40, -32, 1),
  };
  f.minus_parts = {
      LambertComponent("T1", +1, 40, 50, 10, 40, 12, 0),
      LambertComponent("T2", +1, 40, 70, 29, 40, 32, 0),
      LambertComponent("T3", +1, 40, 10, -8, 40, -12, 1),
      LambertComponent("T4", +1, 40, -50, 13, 40, -32, 1),
  };
  return f;
}

const std::map<std::string, SumSplit>& families() {
  static const std::map<std::string, SumSplit> m = {
      {"1.4", make_family_14()},
      {"1.5", make_family_15()},
      {"1.6", make_family_16()},
      {"1.7", make_family_17()},
  };
  return m;
}

/* Per-family bound data: bound_a = sum over terms of coef*floor(sqrt(n/div))
 * plus the constant; per-component caps are (divisor, add-one?). */
struct BoundSpec {
  std::vector<std::pair<long, long>> sqrt_terms;  // (coef, divisor)
  long constant;
  std::vector<std::pair<long, int>> component_caps;  // (divisor, plus)
  long n0;
};

const std::map<std::string, BoundSpec>& bound_specs() {
  static const std::map<std::string, BoundSpec> m = {
      {"1.4", {{{3, 30}, {1, 20}}, 3, {{30, 1}, {30, 1}, {30, 0}, {20, 1}}, 60}},
      {"1.5", {{{3, 30}, {1, 25}}, 3, {{30, 1}, {30, 1}, {25, 0}, {30, 1}}, 24}},
      {"1.6", {{{3, 40}, {1, 24}}, 3, {{40, 1}, {40, 1}, {40, 0}, {24, 1}}, 2}},
      {"1.7", {{{4, 40}}, 3, {{40, 1}, {40, 1}, {40, 0}, {40, 1}}, 1}},
  };
  return m;
}

const BoundSpec& bound_spec(const std::string& id) {
  auto it = bound_specs().find(id);
  if (it == bound_specs().end()) throw DomainError("unknown family id: " + id);
  return it->second;
}

}  // namespace

const SumSplit& family_split(const std::string& id) {
  auto it = families().find(id);
  if (it == families().end()) throw DomainError("unknown family id: " + id);
  return it->second;
}

SplitCheck verify_split(const std::string& id, long order) {
  const SumSplit& f = family_split(id);
  LaurentSeries direct = bilateral_series(f.bilateral, order);
  LaurentSeries split = LaurentSeries::zero(order);
  for (const auto& c : f.plus_parts) split = split + expand_component(c, order);
  for (const auto& c : f.minus_parts) split = split - expand_component(c, order);
  if (f.bilateral_sign < 0) split = -split;
  /* split now equals sigma*(plus - minus) ... i.e. the bilateral sum itself:
   * sigma * bilateral = plus - minus. */
  auto mm = LaurentSeries::first_mismatch(direct, split, order);
  if (!mm) return SplitCheck{true, 0, 0, 0};
  return SplitCheck{false, mm->exponent, mm->lhs, mm->rhs};
}

Int bound_a(const std::string& id, const Int& n) {
  const BoundSpec& b = bound_spec(id);
  Int total = b.constant;
  for (auto [coef, div] : b.sqrt_terms) total += coef * isqrt(Int(n / div));
  return total;
}

Int bound_b(const std::string& id, const Int& n) {
  if (id == "1.4") return n / 6;
  if (id == "1.5") return 2 * ((n - 1) / 6);
  if (id == "1.6") return 2 * n;
  if (id == "1.7") return 2 * (n + 1);
  throw DomainError("unknown family id: " + id);
}

Int component_bound(const std::string& id, size_t i, const Int& N) {
  const BoundSpec& b = bound_spec(id);
  if (i >= b.component_caps.size())
    throw DomainError("component index out of range");
  auto [div, plus] = b.component_caps[i];
  return isqrt(Int(N / div)) + plus;
}

long threshold_n0(const std::string& id) { return bound_spec(id).n0; }

bool real_threshold_14(const Int& n) {
  /* n/6 > 3 sqrt(n/30) + sqrt(n/20) + 4
   * <=> 10n - 240 > 6 sqrt(30 n) + 3 sqrt(20 n)        [times 60]
   * <=> L > 0 and L^2 - 1260 n > 360 n sqrt(6)          [square once]
   * <=> M > 0 and M^2 > 777600 n^2                      [square again]
   * with L = 10n - 240, M = L^2 - 1260 n. Both squarings are sign-checked,
   * so the chain is an equivalence. */
  Int L = 10 * n - 240;
  if (L <= 0) return false;
  Int M = L * L - 1260 * n;
  if (M <= 0) return false;
  return M * M > 777600 * n * n;
}

long c_coeff(long n) {
  if (n < 0) throw DomainError("c_coeff needs n >= 0");
  long count = 0;
  for (long j = (n % 2 == 0) ? 0 : 1; 3 * j <= n; j += 2) ++count;
  return count;
}

}  // namespace qrank
