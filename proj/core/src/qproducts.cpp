#include "qrank/qproducts.hpp"

#include <string>

namespace qrank {

ProductAtom::ProductAtom(int sign_, long e_, long b_)
    : sign(sign_), e(e_), b(b_) {
  if (sign != 1 && sign != -1) throw DomainError("atom sign must be +1 or -1");
  if (e < 0) throw DomainError("atom exponent must be >= 0");
  if (b < 1) throw DomainError("atom base must be >= 1");
  if (sign == 1 && e == 0)
    throw DomainError("atom (+1, 0, b): the infinite product vanishes");
}

namespace {

/* In-place passes over a dense coefficient vector indexed from the window's
 * valuation. Multiplying by (1 - s q^e) and dividing by it are both single
 * O(window) sweeps; division runs forward so already-updated entries feed the
 * recurrence c[n] = a[n] + s*c[n-e]. */
void mul_binomial_inplace(std::vector<Rat>& c, int sign, long e) {
  if (e <= 0) throw DomainError("binomial exponent must be >= 1");
  long len = static_cast<long>(c.size());
  for (long i = len - 1; i >= e; --i) {
    const Rat& prev = c[static_cast<size_t>(i - e)];
    if (prev == 0) continue;
    if (sign > 0)
      c[static_cast<size_t>(i)] -= prev;
    else
      c[static_cast<size_t>(i)] += prev;
  }
}

void div_binomial_inplace(std::vector<Rat>& c, int sign, long e) {
  if (e <= 0) throw DomainError("binomial exponent must be >= 1");
  long len = static_cast<long>(c.size());
  for (long i = e; i < len; ++i) {
    const Rat& prev = c[static_cast<size_t>(i - e)];
    if (prev == 0) continue;
    if (sign > 0)
      c[static_cast<size_t>(i)] += prev;
    else
      c[static_cast<size_t>(i)] -= prev;
  }
}

std::vector<Rat> dense_of(const LaurentSeries& s) {
  std::vector<Rat> c(static_cast<size_t>(s.order() - s.valuation()));
  for (long n = s.valuation(); n < s.order(); ++n)
    c[static_cast<size_t>(n - s.valuation())] = s.coeff(n);
  return c;
}

}  // namespace

LaurentSeries mul_binomial(const LaurentSeries& s, int sign, long e) {
  auto c = dense_of(s);
  mul_binomial_inplace(c, sign, e);
  return LaurentSeries::from_coeffs(s.valuation(), std::move(c));
}

LaurentSeries div_binomial(const LaurentSeries& s, int sign, long e) {
  auto c = dense_of(s);
  div_binomial_inplace(c, sign, e);
  return LaurentSeries::from_coeffs(s.valuation(), std::move(c));
}

LaurentSeries pochhammer_finite(const ProductAtom& a, long n, long order) {
  if (n < 0) throw DomainError("pochhammer_finite requires n >= 0");
  std::vector<Rat> c(static_cast<size_t>(order), Rat(0));
  if (order < 1) throw WindowError("order must be >= 1");
  c[0] = 1;
  for (long i = 0; i < n; ++i) {
    long exp = a.e + i * a.b;
    if (exp >= order) break;  // further factors are 1 on this window
    if (exp == 0) {
      /* (1 - sign) constant factor; sign=+1 is unreachable (ctor rejects). */
      for (auto& x : c) x *= 2;
      continue;
    }
    mul_binomial_inplace(c, a.sign, exp);
  }
  return LaurentSeries::from_coeffs(0, std::move(c));
}

LaurentSeries pochhammer_infinite(const ProductAtom& a, long order) {
  if (order < 1) throw WindowError("order must be >= 1");
  std::vector<Rat> c(static_cast<size_t>(order), Rat(0));
  c[0] = 1;
  if (a.e == 0) {
    for (auto& x : c) x *= 2;  // the i=0 factor (1+1); sign=-1 guaranteed here
    for (long exp = a.b; exp < order; exp += a.b) mul_binomial_inplace(c, a.sign, exp);
    return LaurentSeries::from_coeffs(0, std::move(c));
  }
  for (long exp = a.e; exp < order; exp += a.b)
    mul_binomial_inplace(c, a.sign, exp);
  return LaurentSeries::from_coeffs(0, std::move(c));
}

LaurentSeries J(long b, long order) {
  if (b < 1) throw DomainError("J requires b >= 1");
  return pochhammer_infinite(ProductAtom(1, b, b), order);
}

LaurentSeries Jab(long a, long b, long order) {
  if (!(0 < a && a < b)) throw DomainError("Jab requires 0 < a < b");
  ProductExpr e;
  e.mul(ProductAtom(1, a, b)).mul(ProductAtom(1, b - a, b)).mul(ProductAtom(1, b, b));
  return e.eval(order);
}

LaurentSeries Lab(long a, long b, long order) {
  if (!(0 < a && a < b)) throw DomainError("Lab requires 0 < a < b");
  ProductExpr e;
  e.mul_J(b, 2).mul_Jab(a, b, -1);
  return e.eval(order);
}

LaurentSeries theta_sum(const Rat& A2, const Rat& A1, long order) {
  if (A2 <= 0) throw DomainError("theta_sum requires A2 > 0");
  if (order < 1) throw WindowError("order must be >= 1");
  std::vector<Rat> c(static_cast<size_t>(order), Rat(0));
  /* Walk n = 0, 1, 2, ... and 0, -1, -2, ... separately; on each arm stop
   * once the exponent is past the window *and* past the parabola's vertex
   * (A2 > 0 makes the exponent eventually increasing in |n|). */
  for (int dir : {+1, -1}) {
    for (long k = (dir > 0 ? 0 : 1);; ++k) {
      long n = dir * k;
      Rat expo = A2 * n * n + A1 * n;
      if (expo >= order) {
        /* past the vertex -A1/(2 A2)? compare without division:
         * dir=+1: beyond when n >= -A1/(2A2), i.e. 2 A2 n + A1 >= 0. */
        Rat slope = 2 * A2 * n + A1;
        if ((dir > 0 && slope >= 0) || (dir < 0 && slope <= 0)) break;
        continue;
      }
      if (expo.get_den() != 1 || expo < 0)
        throw DomainError("theta_sum exponent not a nonnegative integer at n=" +
                          std::to_string(n));
      long e = static_cast<long>(expo.get_num().get_si());
      c[static_cast<size_t>(e)] += 1;
    }
  }
  return LaurentSeries::from_coeffs(0, std::move(c));
}

LaurentSeries theta_product(const Rat& A2, const Rat& A1, long order) {
  Rat ep = A2 + A1, em = A2 - A1, b2 = 2 * A2;
  if (ep.get_den() != 1 || em.get_den() != 1 || b2.get_den() != 1)
    throw DomainError("theta_product requires integer A2+A1, A2-A1, 2*A2");
  long p = static_cast<long>(ep.get_num().get_si());
  long m = static_cast<long>(em.get_num().get_si());
  long b = static_cast<long>(b2.get_num().get_si());
  if (p < 0 || m < 0 || b < 1) throw DomainError("theta_product out of range");
  ProductExpr e;
  e.mul(ProductAtom(-1, p, b)).mul(ProductAtom(-1, m, b)).mul(ProductAtom(1, b, b));
  return e.eval(order);
}

ProductExpr& ProductExpr::mul(const ProductAtom& a, int power) {
  if (power != 0) factors.push_back(Factor{a.sign, a.e, a.b, power, true});
  return *this;
}

ProductExpr& ProductExpr::mul_J(long b, int power) {
  if (b < 1) throw DomainError("J requires b >= 1");
  return mul(ProductAtom(1, b, b), power);
}

ProductExpr& ProductExpr::mul_Jab(long a, long b, int power) {
  if (!(0 < a && a < b)) throw DomainError("Jab requires 0 < a < b");
  mul(ProductAtom(1, a, b), power);
  mul(ProductAtom(1, b - a, b), power);
  mul(ProductAtom(1, b, b), power);
  return *this;
}

ProductExpr& ProductExpr::mul_Lab(long a, long b, int power) {
  mul_J(b, 2 * power);
  mul_Jab(a, b, -power);
  return *this;
}

ProductExpr& ProductExpr::mul_binom(long e, int power) {
  if (e < 1) throw DomainError("binomial exponent must be >= 1");
  if (power != 0) factors.push_back(Factor{1, e, 1, power, false});
  return *this;
}

LaurentSeries ProductExpr::eval(long order) const {
  long work_order = order - shift;
  if (work_order < 1) throw WindowError("product window empty after shift");
  std::vector<Rat> c(static_cast<size_t>(work_order), Rat(0));
  c[0] = coeff;
  for (const auto& f : factors) {
    bool divide = f.power < 0;
    int reps = divide ? -f.power : f.power;
    for (int r = 0; r < reps; ++r) {
      if (f.e == 0) {
        /* constant factor (1 - sign) = 2; sign=-1 guaranteed by ProductAtom */
        for (auto& x : c)
          if (x != 0) (divide ? x /= 2 : x *= 2);
      } else if (f.e < work_order) {
        if (divide)
          div_binomial_inplace(c, f.sign, f.e);
        else
          mul_binomial_inplace(c, f.sign, f.e);
      }
      if (!f.infinite) continue;
      for (long exp = f.e + f.b; exp < work_order; exp += f.b) {
        if (divide)
          div_binomial_inplace(c, f.sign, exp);
        else
          mul_binomial_inplace(c, f.sign, exp);
      }
    }
  }
  return LaurentSeries::from_coeffs(0, std::move(c)).shifted(shift);
}

}  // namespace qrank
