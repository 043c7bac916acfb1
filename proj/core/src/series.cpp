#include "qrank/series.hpp"

#include <algorithm>
#include <sstream>

namespace qrank {

namespace {
const Rat kZero = 0;
}

LaurentSeries::LaurentSeries(long valuation, long order)
    : val_(valuation), order_(order) {
  if (order_ <= val_)
    throw WindowError("empty series window [" + std::to_string(val_) + ", " +
                      std::to_string(order_) + ")");
  c_.assign(static_cast<size_t>(order_ - val_), Rat(0));
}

LaurentSeries LaurentSeries::monomial(const Rat& c, long k, long order) {
  if (k >= order) throw WindowError("monomial exponent at or above order");
  LaurentSeries s(k, order);
  s.at(k) = c;
  return s;
}

LaurentSeries LaurentSeries::from_coeffs(long valuation,
                                         std::vector<Rat> coeffs) {
  if (coeffs.empty()) throw WindowError("from_coeffs: empty window");
  LaurentSeries s(valuation, valuation + static_cast<long>(coeffs.size()));
  s.c_ = std::move(coeffs);
  return s;
}

void LaurentSeries::set_at(long n, const Rat& value) {
  if (n < val_ || n >= order_)
    throw WindowError("set_at outside the stored window");
  at(n) = value;
}

void LaurentSeries::add_at(long n, const Rat& delta) {
  if (n < val_ || n >= order_)
    throw WindowError("add_at outside the stored window");
  at(n) += delta;
}

const Rat& LaurentSeries::coeff(long n) const {
  if (n >= order_)
    throw WindowError("coefficient at exponent " + std::to_string(n) +
                      " is beyond order " + std::to_string(order_));
  if (n < val_) return kZero;
  return at(n);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  long val = std::min(a.val_, b.val_);
  long order = std::min(a.order_, b.order_);
  LaurentSeries r(val, order);
  for (long n = val; n < order; ++n) {
    Rat s = a.coeff(n) + b.coeff(n);
    r.at(n) = s;
  }
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  long val = a.val_ + b.val_;
  long order = std::min(a.order_ + b.val_, b.order_ + a.val_);
  LaurentSeries r(val, order);
  /* Plain Cauchy product, skipping zero coefficients of a. Exponents at or
   * above `order` would receive contributions from unknown territory, which
   * is exactly why the window stops there. */
  for (long i = a.val_; i < a.order_; ++i) {
    const Rat& ai = a.at(i);
    if (ai == 0) continue;
    long jmax = std::min(b.order_, order - i);
    for (long j = b.val_; j < jmax; ++j) {
      const Rat& bj = b.at(j);
      if (bj == 0) continue;
      r.at(i + j) += ai * bj;
    }
  }
  return r;
}

LaurentSeries LaurentSeries::scaled(const Rat& c) const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.order_ += k;
  return r;
}

LaurentSeries LaurentSeries::inverse() const {
  if (at(val_) == 0)
    throw NotInvertibleError("leading stored coefficient is zero");
  /* Write A = q^v (a_0 + a_1 q + ...); then 1/A = q^{-v} B with
   * b_0 = 1/a_0 and b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}. */
  long len = order_ - val_;
  std::vector<Rat> b(static_cast<size_t>(len));
  Rat inv_a0 = Rat(1) / at(val_);
  b[0] = inv_a0;
  for (long n = 1; n < len; ++n) {
    Rat acc = 0;
    for (long k = 1; k <= n; ++k) {
      const Rat& ak = c_[static_cast<size_t>(k)];
      if (ak == 0) continue;
      acc += ak * b[static_cast<size_t>(n - k)];
    }
    b[static_cast<size_t>(n)] = -acc * inv_a0;
  }
  LaurentSeries r(-val_, order_ - 2 * val_);
  r.c_ = std::move(b);
  return r;
}

LaurentSeries LaurentSeries::substitute_power(long m) const {
  if (m < 1) throw DomainError("substitute_power requires m >= 1");
  LaurentSeries r(m * val_, m * order_);
  for (long n = val_; n < order_; ++n) r.at(m * n) = at(n);
  return r;
}

LaurentSeries LaurentSeries::extract_progression(long r, long m) const {
  if (m < 1 || r < 0 || r >= m)
    throw DomainError("extract_progression requires 0 <= r < m");
  if (r >= order_)
    throw WindowError("progression start at or above order");
  long val = ceil_div(val_ - r, m);
  long order = ceil_div(order_ - r, m);
  if (val >= order) val = order - 1;  // all-zero window: keep it well-formed
  LaurentSeries out(val, order);
  for (long n = val; n < order; ++n) {
    long e = m * n + r;
    if (e >= val_ && e < order_) out.at(n) = at(e);
  }
  return out;
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
  if (new_order > order_)
    throw WindowError("cannot extend a window by truncation");
  if (new_order <= val_) {
    LaurentSeries r(new_order - 1, new_order);
    return r;
  }
  LaurentSeries r(val_, new_order);
  for (long n = val_; n < new_order; ++n) r.at(n) = at(n);
  return r;
}

LaurentSeries LaurentSeries::tightened() const {
  long v = val_;
  while (v + 1 < order_ && at(v) == 0) ++v;
  if (v == val_) return *this;
  LaurentSeries r(v, order_);
  for (long n = v; n < order_; ++n) r.at(n) = at(n);
  return r;
}

bool LaurentSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

std::optional<LaurentSeries::Mismatch> LaurentSeries::first_mismatch(
    const LaurentSeries& a, const LaurentSeries& b, long below) {
  if (a.order_ < below || b.order_ < below)
    throw WindowError("comparison window exceeds a series order");
  for (long n = std::min(a.val_, b.val_); n < below; ++n) {
    const Rat& x = a.coeff(n);
    const Rat& y = b.coeff(n);
    if (x != y) return Mismatch{n, x, y};
  }
  return std::nullopt;
}

bool LaurentSeries::eq_upto(const LaurentSeries& a, const LaurentSeries& b,
                            long below) {
  return !first_mismatch(a, b, below).has_value();
}

std::string LaurentSeries::to_string(long max_terms) const {
  std::ostringstream os;
  long shown = 0;
  bool first = true;
  for (long n = val_; n < order_ && shown < max_terms; ++n) {
    const Rat& c = at(n);
    if (c == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(c) << "*q^" << n;
    first = false;
    ++shown;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

}  // namespace qrank
