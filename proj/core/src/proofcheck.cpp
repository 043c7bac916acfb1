#include "qrank/proofcheck.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace qrank {

namespace {

constexpr std::pair<TargetId, const char*> kTargetNames[] = {
    {TargetId::C14, "1.4"},    {TargetId::C15, "1.5"},
    {TargetId::C16, "1.6"},    {TargetId::C17, "1.7"},
    {TargetId::C18, "1.8"},    {TargetId::C19, "1.9"},
    {TargetId::C110, "1.10"},  {TargetId::T22a, "T2.2a"},
    {TargetId::T22b, "T2.2b"}, {TargetId::T23, "T2.3"},
};

}  // namespace

std::string target_name(TargetId id) {
  for (auto [t, n] : kTargetNames)
    if (t == id) return n;
  throw DomainError("unknown target id");
}

std::optional<TargetId> target_from_name(const std::string& name) {
  for (auto [t, n] : kTargetNames)
    if (name == n) return t;
  return std::nullopt;
}

bool is_conjecture(TargetId id) {
  return id == TargetId::C14 || id == TargetId::C15 || id == TargetId::C16 ||
         id == TargetId::C17;
}

bool is_probe(TargetId id) {
  return id == TargetId::C18 || id == TargetId::C19 || id == TargetId::C110;
}

bool is_theorem(TargetId id) {
  return id == TargetId::T22a || id == TargetId::T22b || id == TargetId::T23;
}

bool ProofReport::passed() const {
  for (const auto& s : steps)
    if (s.status == StepStatus::Fail) return false;
  return true;
}

long default_order(TargetId id) {
  switch (id) {
    case TargetId::C14:
    case TargetId::C15:
      return 400;
    case TargetId::C16:
    case TargetId::C17:
      return 300;
    case TargetId::T22a:
    case TargetId::T22b:
      return 200;
    default:
      return 80;  // T2.3 and the probes: enumeration-bounded
  }
}

long default_oracle_order(TargetId id) {
  switch (id) {
    case TargetId::C14:
    case TargetId::C15:
      return 300;
    case TargetId::T22a:
    case TargetId::T22b:
      return 200;
    default:
      return 80;  // every M2-backed window
  }
}

namespace {

/* ------------------------------------------------------------------ */
/* report plumbing                                                     */

class StepClock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ =
      std::chrono::steady_clock::now();
};

void push_step(ProofReport& rep, const std::string& name, bool ok,
               std::string detail, const StepClock& clock) {
  rep.steps.push_back(StepResult{name,
                                 ok ? StepStatus::Pass : StepStatus::Fail,
                                 std::move(detail), clock.seconds()});
}

void push_skipped(ProofReport& rep, const std::string& name,
                  std::string detail) {
  rep.steps.push_back(
      StepResult{name, StepStatus::Skipped, std::move(detail), 0.0});
}

std::string q_witness(long exponent, const Rat& lhs, const Rat& rhs) {
  std::ostringstream os;
  os << "q^" << exponent << ": " << rat_to_string(lhs) << " vs "
     << rat_to_string(rhs);
  return os.str();
}

std::string mm_witness(const LaurentSeries::Mismatch& m) {
  return q_witness(m.exponent, m.lhs, m.rhs);
}

/* Coefficient as a big integer; the callers have already verified (or are
 * in the middle of verifying) that the series is integral. */
Int coeff_int(const LaurentSeries& s, long n) {
  const Rat& c = s.coeff(n);
  if (c.get_den() != 1)
    throw DomainError("non-integer coefficient where an integer was proved");
  return Int(c.get_num());
}

/* ------------------------------------------------------------------ */
/* family data: rank selections, product parts, prefactors             */

struct FamilyShape {
  RankKind kind;
  long r;                        // coefficient n <-> rank difference at 5n+r
  std::vector<long> plus, minus; // residues mod 10 entering with +/-
  long strict_from;              // the inequality is claimed for n >= this
  Rat constant;                  // expected rank difference at n = 0
  Rat product_constant;          // expected constant term of the product part
};

const FamilyShape& family_shape(const std::string& fam) {
  static const std::map<std::string, FamilyShape> k = {
      {"1.4", {RankKind::Dyson, 0, {0, 1}, {4, 5}, 0, Rat(1), Rat(1)}},
      {"1.5", {RankKind::Dyson, 0, {1, 2}, {3, 4}, 1, Rat(0), Rat(0)}},
      {"1.6", {RankKind::M2, 0, {0, 1}, {4, 5}, 0, Rat(1), Rat(0)}},
      {"1.7", {RankKind::M2, 4, {0, 1}, {4, 5}, 0, Rat(2), Rat(2)}},
  };
  auto it = k.find(fam);
  if (it == k.end()) throw DomainError("unknown family id: " + fam);
  return it->second;
}

int family_index(const std::string& fam) {
  if (fam == "1.4") return 0;
  if (fam == "1.5") return 1;
  if (fam == "1.6") return 2;
  if (fam == "1.7") return 3;
  throw DomainError("unknown family id: " + fam);
}

/* The eta-type product part of each dissected generating function. */
ProductExpr family_product_expr(const std::string& fam) {
  ProductExpr e;
  if (fam == "1.4") {
    e.mul_J(5, 2)
        .mul_J(10, 5)
        .mul_Jab(4, 10, 2)
        .mul_Jab(2, 10, -4)
        .mul_Jab(3, 10, -3);
  } else if (fam == "1.5") {
    e.coeff = 2;
    e.shift = 1;
    e.mul_J(10, 6).mul_Jab(2, 10, -2).mul_Jab(3, 10, -2);
  } else if (fam == "1.6") {
    e.coeff = 2;
    e.shift = 1;
    e.mul_J(20, 15)
        .mul_Jab(2, 20)
        .mul_Jab(10, 20)
        .mul_Jab(1, 20, -3)
        .mul_Jab(3, 20, -2)
        .mul_Jab(4, 20, -2)
        .mul_Jab(5, 20, -2)
        .mul_Jab(6, 20, -1)
        .mul_Jab(7, 20, -2)
        .mul_Jab(9, 20, -3);
  } else if (fam == "1.7") {
    e.coeff = 2;
    e.mul_J(20, 15)
        .mul_Jab(6, 20)
        .mul_Jab(10, 20)
        .mul_Jab(1, 20, -2)
        .mul_Jab(2, 20, -1)
        .mul_Jab(3, 20, -3)
        .mul_Jab(5, 20, -2)
        .mul_Jab(7, 20, -3)
        .mul_Jab(8, 20, -2)
        .mul_Jab(9, 20, -2);
  } else {
    throw DomainError("unknown family id: " + fam);
  }
  return e;
}

/* The 1.7 source admits a second reading of its 15th-power factor (period
 * 100 instead of period 20). Assembled only to be ruled out. */
ProductExpr product_expr_17_period100() {
  ProductExpr e;
  e.coeff = 2;
  e.mul_J(100, 15)
      .mul_Jab(6, 20)
      .mul_Jab(10, 20)
      .mul_Jab(1, 20, -2)
      .mul_Jab(2, 20, -1)
      .mul_Jab(3, 20, -3)
      .mul_Jab(5, 20, -2)
      .mul_Jab(7, 20, -3)
      .mul_Jab(8, 20, -2)
      .mul_Jab(9, 20, -2);
  return e;
}

/* Independent rewrite of the 1.7 product: a double geometric pole times
 * L_{9,20}^2 times a plus/minus product quotient. Used as the structural
 * arbiter between the two readings above. */
ProductExpr rewrite_expr_17() {
  ProductExpr e;
  e.coeff = 2;
  e.mul_binom(1, -2).mul_Lab(9, 20, 2);
  for (long a : {3L, 7L, 13L, 17L}) e.mul(ProductAtom(-1, a, 20));
  e.mul(ProductAtom(-1, 5, 20), 2).mul(ProductAtom(-1, 15, 20), 2);
  e.mul(ProductAtom(1, 2, 20), -1).mul(ProductAtom(1, 18, 20), -1);
  for (long a : {3L, 7L, 8L, 12L, 13L, 17L, 19L, 21L})
    e.mul(ProductAtom(1, a, 20), -2);
  return e;
}

/* Reciprocal of the J_5 (families 1.4/1.5) or J_{5,20} (1.6/1.7) prefactor,
 * kept as binomial divisions so no generic series inversion is needed. */
ProductExpr family_prefactor_inv(const std::string& fam) {
  ProductExpr e;
  int fi = family_index(fam);
  if (fi <= 1)
    e.mul_J(5, -1);
  else
    e.mul_Jab(5, 20, -1);
  return e;
}

/* ------------------------------------------------------------------ */
/* the five-block identity tables                                      */

/* One J-type power: a == 0 encodes J_b, otherwise J_{a,b}. */
struct JPow {
  long a;
  long b;
  int power;
};

/* One additive piece of a block: coeff * q^shift * (product of J-powers),
 * optionally times a bilateral alternating sum. */
struct BlockPart {
  Rat coeff;
  long shift = 0;
  std::vector<JPow> js;
  std::optional<BilateralSum> sum;
};

using Block = std::vector<BlockPart>;

Block block_table(TargetId id, int i) {
  const Rat h75(75, 2);  // 75/2: the mod-50 sums carry half-integer quadratics
  const Rat h25(25, 2);
  if (id == TargetId::T22a) {
    switch (i) {
      case 0:
        return {
            BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {20, 50, 2},
                             {10, 50, -4}, {15, 50, -3}}, std::nullopt},
            BlockPart{1, 0, {{0, 25, -1}},
                      BilateralSum{h75, h75, 5, 25, 5}},
        };
      case 1:
        return {BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {5, 50, -1},
                                 {10, 50, -2}, {15, 50, -2}}, std::nullopt}};
      case 2:
        return {BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {5, 50, -2},
                                 {15, 50, -1}, {20, 50, -2}}, std::nullopt}};
      case 3:
        return {
            BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {10, 50, 2},
                             {5, 50, -3}, {20, 50, -4}}, std::nullopt},
            BlockPart{-1, 0, {{0, 25, -1}},
                      BilateralSum{h75, h75, 5, 25, 10}},
        };
      case 4:
        return {BlockPart{2, 0, {{0, 50, 6}, {0, 25, -1}, {5, 50, -1},
                                 {10, 50, -1}, {15, 50, -1}, {20, 50, -1}},
                          std::nullopt}};
    }
  } else if (id == TargetId::T22b) {
    switch (i) {
      case 0:
        return {
            BlockPart{2, 5, {{0, 50, 6}, {0, 25, -1}, {10, 50, -2},
                             {15, 50, -2}}, std::nullopt},
            BlockPart{-1, 0, {{0, 25, -1}},
                      BilateralSum{h75, h75, 5, 25, 5}},
        };
      case 1:
        return {BlockPart{2, 5, {{0, 50, 6}, {0, 25, -1}, {5, 50, -1},
                                 {15, 50, -1}, {20, 50, -2}}, std::nullopt}};
      case 2:
        return {BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {20, 50, 1},
                                 {10, 50, -3}, {15, 50, -3}}, std::nullopt}};
      case 3:
        return {BlockPart{1, 0, {{0, 25, 1}, {0, 50, 5}, {5, 50, -1},
                                 {10, 50, -1}, {15, 50, -2}, {20, 50, -1}},
                          std::nullopt}};
      case 4:
        /* The deep block: a half-weight product shifted down five slots and
         * a sum whose n = 0 denominator degenerates to a constant, leaving
         * an exact 1/2 term. Their q^-5 constants cancel. */
        return {
            BlockPart{Rat(1, 2), -5, {{0, 25, 1}, {0, 50, 5}, {20, 50, 2},
                                      {25, 50, 1}, {10, 50, -4},
                                      {15, 50, -4}}, std::nullopt},
            BlockPart{-1, -5, {{0, 25, -1}},
                      BilateralSum{h75, h25, 0, 25, 0}},
        };
    }
  } else if (id == TargetId::T23) {
    switch (i) {
      case 0:
        return {
            BlockPart{2, 5, {{0, 100, 15}, {10, 100, 1}, {50, 100, 1},
                             {5, 100, -3}, {15, 100, -2}, {20, 100, -2},
                             {25, 100, -3}, {30, 100, -1}, {35, 100, -2},
                             {45, 100, -3}}, std::nullopt},
            BlockPart{1, 0, {{25, 100, -1}},
                      BilateralSum{50, 25, 0, 50, 10}},
        };
      case 1:
        return {BlockPart{1, 0, {{0, 100, 15}, {20, 100, 1}, {30, 100, 2},
                                 {50, 100, 1}, {5, 100, -2}, {10, 100, -2},
                                 {15, 100, -4}, {25, 100, -1}, {35, 100, -4},
                                 {40, 100, -3}, {45, 100, -2}},
                          std::nullopt}};
      case 2:
        return {BlockPart{1, 0, {{0, 100, 15}, {50, 100, 1}, {5, 100, -3},
                                 {15, 100, -3}, {20, 100, -1}, {25, 100, -1},
                                 {35, 100, -3}, {40, 100, -1}, {45, 100, -3}},
                          std::nullopt}};
      case 3:
        return {BlockPart{1, 0, {{0, 100, 15}, {10, 100, 2}, {40, 100, 1},
                                 {50, 100, 1}, {5, 100, -4}, {15, 100, -2},
                                 {20, 100, -3}, {25, 100, -1}, {30, 100, -2},
                                 {35, 100, -2}, {45, 100, -4}},
                          std::nullopt}};
      case 4:
        return {
            BlockPart{2, 0, {{0, 100, 15}, {30, 100, 1}, {50, 100, 1},
                             {5, 100, -2}, {10, 100, -1}, {15, 100, -3},
                             {25, 100, -3}, {35, 100, -3}, {40, 100, -2},
                             {45, 100, -2}}, std::nullopt},
            BlockPart{1, 0, {{25, 100, -1}},
                      BilateralSum{50, 75, 20, 50, 30}},
        };
    }
  }
  throw DomainError("block index must be 0..4 on a T-type id");
}

/* q^5 -> q on a whole block: every exponent in sight is divisible by 5. */
long div5(long x) {
  if (x % 5 != 0) throw DomainError("block exponent not divisible by 5");
  return x / 5;
}

Block scaled_block(Block blk) {
  for (auto& p : blk) {
    p.shift = div5(p.shift);
    for (auto& j : p.js) {
      j.a = div5(j.a);
      j.b = div5(j.b);
    }
    if (p.sum) {
      p.sum->a2 /= 5;
      p.sum->a1 /= 5;
      p.sum->a0 /= 5;
      p.sum->d1 = div5(p.sum->d1);
      p.sum->d0 = div5(p.sum->d0);
    }
  }
  return blk;
}

LaurentSeries eval_part(const BlockPart& p, long order) {
  long inner = order - p.shift;
  if (inner < 1) throw WindowError("block window empty after shift");
  ProductExpr pe;
  pe.coeff = p.coeff;
  for (const auto& j : p.js) {
    if (j.a == 0)
      pe.mul_J(j.b, j.power);
    else
      pe.mul_Jab(j.a, j.b, j.power);
  }
  LaurentSeries s = pe.eval(inner);
  if (p.sum) s = s * bilateral_series(*p.sum, inner);
  return s.shifted(p.shift);
}

LaurentSeries eval_block(const Block& blk, long order) {
  LaurentSeries total = eval_part(blk.front(), order);
  for (size_t i = 1; i < blk.size(); ++i)
    total = total + eval_part(blk[i], order);
  return total;
}

struct TheoremShape {
  RankKind kind;
  std::vector<long> plus, minus;
  /* family id reproduced by extracting exponents ≡ i (mod 5), or "" */
  const char* gen_at[5];
};

const TheoremShape& theorem_shape(TargetId id) {
  static const std::map<TargetId, TheoremShape> k = {
      {TargetId::T22a,
       {RankKind::Dyson, {0, 1}, {4, 5}, {"1.4", "", "", "", ""}}},
      {TargetId::T22b,
       {RankKind::Dyson, {1, 2}, {3, 4}, {"1.5", "", "", "", ""}}},
      {TargetId::T23,
       {RankKind::M2, {0, 1}, {4, 5}, {"1.6", "", "", "", "1.7"}}},
  };
  auto it = k.find(id);
  if (it == k.end()) throw DomainError("not a T-type id");
  return it->second;
}

RankTable build_oracle(RankKind kind, long m, long n_max) {
  return kind == RankKind::Dyson ? rank_table_dp(m, n_max)
                                 : rank_table_enum(kind, m, n_max);
}

/* ------------------------------------------------------------------ */
/* fast integer bounds for the million-point threshold sweep           */

std::uint64_t bound_a_fast(int fi, std::uint64_t n) {
  switch (fi) {
    case 0:
      return 3 * isqrt_u64(n / 30) + isqrt_u64(n / 20) + 3;
    case 1:
      return 3 * isqrt_u64(n / 30) + isqrt_u64(n / 25) + 3;
    case 2:
      return 3 * isqrt_u64(n / 40) + isqrt_u64(n / 24) + 3;
    default:
      return 4 * isqrt_u64(n / 40) + 3;
  }
}

std::uint64_t bound_b_fast(int fi, std::uint64_t n) {
  switch (fi) {
    case 0:
      return n / 6;
    case 1:
      return 2 * ((n - 1) / 6);
    case 2:
      return 2 * n;
    default:
      return 2 * (n + 1);
  }
}

/* 128-bit mirror of real_threshold_14 for sweep speed; safe for n well past
 * the documented 10^6 range (the squared quantities stay below 2^127 for
 * n <= 10^8). */
bool real_threshold_14_fast(std::uint64_t n) {
  using w128 = unsigned __int128;
  if (10 * n <= 240) return false;
  w128 L = 10 * (w128)n - 240;
  w128 L2 = L * L;
  if (L2 <= (w128)1260 * n) return false;
  w128 M = L2 - (w128)1260 * n;
  return M * M > (w128)777600 * n * n;
}

}  // namespace

/* ------------------------------------------------------------------ */
/* public series builders                                              */

LaurentSeries product_series(const std::string& family, long order) {
  return family_product_expr(family).eval(order);
}

LaurentSeries rhs_series(const std::string& family, long order) {
  const SumSplit& sp = family_split(family);
  LaurentSeries bracket =
      product_series(family, order) +
      bilateral_series(sp.bilateral, order).scaled(sp.bilateral_sign);
  return family_prefactor_inv(family).eval(order) * bracket;
}

LaurentSeries theorem_block(TargetId id, int block, long order) {
  if (!is_theorem(id)) throw DomainError("theorem_block needs a T-type id");
  if (block < 0 || block > 4) throw DomainError("block index must be 0..4");
  return eval_block(block_table(id, block), order);
}

LaurentSeries theorem_rhs(TargetId id, long order) {
  if (!is_theorem(id)) throw DomainError("theorem_rhs needs a T-type id");
  if (order <= 5) throw DomainError("order too small for a five-block sum");
  LaurentSeries total = theorem_block(id, 0, order);
  for (int i = 1; i < 5; ++i)
    total = total + theorem_block(id, i, order - i).shifted(i);
  return total;
}

/* ------------------------------------------------------------------ */
/* identity verification                                               */

ProofReport verify_theorem(TargetId id, long order) {
  if (!is_theorem(id)) throw DomainError("verify_theorem needs a T-type id");
  if (order < 25) throw DomainError("order < 25 leaves nothing to verify");
  const TheoremShape& ts = theorem_shape(id);

  ProofReport rep;
  rep.id = id;
  rep.order = order;
  rep.oracle_order = order - 1;
  rep.finite_bound = 0;
  rep.evidence_only = false;

  LaurentSeries rhs = LaurentSeries::zero(1);
  {
    StepClock cl;
    rhs = theorem_rhs(id, order);
    const RankTable t = build_oracle(ts.kind, 10, order - 1);
    LaurentSeries diff = rank_diff_series(t, ts.plus, ts.minus, 0, 1);
    auto mm = LaurentSeries::first_mismatch(rhs, diff, order);
    std::ostringstream d;
    if (mm) {
      d << "assembled right side disagrees with the "
        << (ts.kind == RankKind::Dyson ? "DP" : "enumeration")
        << " rank differences: " << mm_witness(*mm);
    } else {
      d << "assembled right side equals the "
        << (ts.kind == RankKind::Dyson ? "DP" : "enumeration")
        << " rank differences below q^" << order;
    }
    push_step(rep, "oracle-identity", !mm, d.str(), cl);
  }

  {
    /* Each residue class mod 5 of the right side must reproduce its own
     * block with q^5 -> q; this is what makes the block sum a dissection
     * rather than just an identity. */
    StepClock cl;
    bool ok = true;
    std::ostringstream d;
    for (int i = 0; i < 5 && ok; ++i) {
      LaurentSeries got = rhs.extract_progression(i, 5);
      LaurentSeries want = eval_block(scaled_block(block_table(id, i)),
                                      got.order());
      auto mm = LaurentSeries::first_mismatch(got, want, got.order());
      if (mm) {
        ok = false;
        d << "residue class " << i << " disagrees with its descaled block: "
          << mm_witness(*mm);
      }
    }
    if (ok)
      d << "all five residue classes reproduce their descaled blocks "
        << "(windows ~" << (order + 4) / 5 << ")";
    push_step(rep, "block-dissection", ok, d.str(), cl);
  }

  {
    /* The published per-family series must fall out of the same extraction. */
    StepClock cl;
    bool ok = true;
    bool any = false;
    std::ostringstream d;
    for (int i = 0; i < 5 && ok; ++i) {
      if (ts.gen_at[i][0] == '\0') continue;
      any = true;
      LaurentSeries got = rhs.extract_progression(i, 5);
      LaurentSeries want = rhs_series(ts.gen_at[i], got.order());
      auto mm = LaurentSeries::first_mismatch(got, want, got.order());
      if (mm) {
        ok = false;
        d << "residue class " << i << " does not match the " << ts.gen_at[i]
          << " series: " << mm_witness(*mm);
      } else {
        if (d.tellp() > 0) d << "; ";
        d << "class " << i << " = family " << ts.gen_at[i] << " below q^"
          << got.order();
      }
    }
    if (!any) d << "no family series is keyed to this identity";
    push_step(rep, "family-extraction", ok, d.str(), cl);
  }

  return rep;
}

/* ------------------------------------------------------------------ */
/* the full per-family argument                                        */

ProofReport verify_conjecture(TargetId id, long order, long finite_bound,
                              long oracle_order) {
  if (!is_conjecture(id))
    throw DomainError("verify_conjecture expects a 1.4-1.7 id");
  const std::string fam = target_name(id);
  if (order <= 0) order = default_order(id);
  if (oracle_order <= 0) oracle_order = default_oracle_order(id);
  if (order < 30) throw DomainError("order < 30 leaves nothing to verify");
  if (finite_bound < 0) finite_bound = 0;

  const SumSplit& sp = family_split(fam);
  const FamilyShape& shape = family_shape(fam);
  const int fi = family_index(fam);

  ProofReport rep;
  rep.id = id;
  rep.order = order;
  rep.oracle_order = oracle_order;
  rep.finite_bound = finite_bound;
  rep.evidence_only = false;

  /* The 1.7 source-reading arbitration needs the oracle window to reach
   * series index 20 (base exponent 104), past the default window. */
  long oracle_nmax = oracle_order;
  if (fi == 3) oracle_nmax = std::max(oracle_nmax, 104L);
  std::optional<RankTable> oracle;
  auto oracle_table = [&]() -> const RankTable& {
    if (!oracle) oracle = build_oracle(shape.kind, 10, oracle_nmax);
    return *oracle;
  };

  std::optional<LaurentSeries> bil;  // the bilateral sum, computed once
  auto bilateral = [&]() -> const LaurentSeries& {
    if (!bil) bil = bilateral_series(sp.bilateral, order);
    return *bil;
  };

  /* (1) the bilateral sum equals its four-plus-four unilateral split */
  {
    StepClock cl;
    SplitCheck sc = verify_split(fam, order);
    std::string d =
        sc.ok ? "bilateral sum equals the split recombination below q^" +
                    std::to_string(order)
              : "split recombination mismatch at " +
                    q_witness(sc.first_mismatch_exponent, sc.lhs, sc.rhs);
    push_step(rep, "split", sc.ok, d, cl);
  }

  /* (2) expand the product part and read off the b-coefficients */
  LaurentSeries prod = LaurentSeries::zero(order);
  {
    StepClock cl;
    bool ok = true;
    std::ostringstream d;

    if (fi == 3) {
      /* Arbitrate the two readings of the 15th-power factor: period 20
       * versus period 100. The oracle rank differences decide; the
       * structural rewrite is recorded as a second witness. */
      LaurentSeries a20 = product_series(fam, order);
      LaurentSeries a100 = product_expr_17_period100().eval(order);
      LaurentSeries pref = family_prefactor_inv(fam).eval(order);
      LaurentSeries rhs20 = pref * (a20 + bilateral());
      LaurentSeries rhs100 = pref * (a100 + bilateral());
      LaurentSeries diff = rank_diff_series(oracle_table(), shape.plus,
                                            shape.minus, shape.r, 5);
      long w = std::min(diff.order(), order);
      bool o20 = LaurentSeries::eq_upto(rhs20, diff, w);
      bool o100 = LaurentSeries::eq_upto(rhs100, diff, w);

      LaurentSeries rw = rewrite_expr_17().eval(order);
      bool r20 = LaurentSeries::eq_upto(a20, rw, order);
      bool r100 = LaurentSeries::eq_upto(a100, rw, order);

      if (o20 == o100) {
        ok = false;
        d << "reading arbitration failed: oracle window (series index < "
          << w << ") does not single out one reading";
      } else {
        prod = o20 ? a20 : a100;
        std::string chosen = o20 ? "20" : "100";
        std::string other = o20 ? "100" : "20";
        d << "period-" << chosen
          << " reading matches the oracle rank differences (index < " << w
          << "); period-" << other << " does not";
        bool rw_agrees = o20 ? r20 : r100;
        rep.findings.push_back(
            "15th-power factor read with period " + chosen +
            "; the independent rewrite " +
            (rw_agrees ? "confirms this reading"
                       : "matches neither reading (recorded, not fatal)") +
            " below q^" + std::to_string(order));
        if (!rw_agrees && (r20 || r100)) {
          ok = false;  // rewrite and oracle disagree outright
          d << "; rewrite contradicts the oracle choice";
        }
      }
    } else {
      prod = product_series(fam, order);
    }

    if (ok) {
      /* integrality + the expected constant term */
      for (long n = prod.valuation(); n < order && ok; ++n) {
        if (prod.coeff(n).get_den() != 1) {
          ok = false;
          d.str("");
          d << "non-integer product coefficient at q^" << n << ": "
            << rat_to_string(prod.coeff(n));
        }
      }
      if (ok && prod.coeff(0) != shape.product_constant) {
        ok = false;
        d.str("");
        d << "product constant term " << rat_to_string(prod.coeff(0))
          << ", expected " << rat_to_string(shape.product_constant);
      }
      if (ok) {
        if (d.tellp() > 0) d << "; ";
        d << "product expanded to q^" << order << ", integer coefficients, "
          << "constant term " << rat_to_string(prod.coeff(0));
        if (fi == 3) {
          /* the double-pole correction: subtracting 1/(1-q)^2 drops the
           * constant to 1 and each b(n) by n+1 */
          LaurentSeries reform =
              prod - ProductExpr().mul_binom(1, -2).eval(order);
          d << "; after subtracting the double-pole series the constant is "
            << rat_to_string(reform.coeff(0));
          if (reform.coeff(0) != 1) ok = false;
        }
      }
    }
    push_step(rep, "product-expansion", ok, d.str(), cl);
  }

  /* (3) product floor: b(n) >= bound_b on the whole window */
  {
    StepClock cl;
    bool ok = true;
    std::ostringstream d;
    for (long n = 1; n < order && ok; ++n) {
      Int b = coeff_int(prod, n);
      Int floor = bound_b(fam, Int(n));
      if (b < floor) {
        ok = false;
        d << "n=" << n << ": b(n)=" << b.get_str()
          << " below the floor " << floor.get_str();
      }
    }
    if (ok)
      d << "b(n) >= floor for 1 <= n <= " << order - 1;
    push_step(rep, "b-lower-bound", ok, d.str(), cl);
  }

  /* (4) counting ceiling: a(n) <= bound_a, per piece and in total */
  LaurentSeries aser = LaurentSeries::zero(order);
  {
    StepClock cl;
    bool ok = true;
    std::ostringstream d;
    std::vector<LaurentSeries> pieces;
    pieces.reserve(sp.minus_parts.size());
    for (const auto& c : sp.minus_parts) {
      pieces.push_back(expand_component(c, order));
      aser = aser + pieces.back();
    }
    for (size_t i = 0; i < pieces.size() && ok; ++i) {
      if (coeff_int(pieces[i], 0) != 0) {
        ok = false;
        d << "piece " << sp.minus_parts[i].name
          << " has a constant term; the ceiling argument assumes none";
      }
      for (long n = 1; n < order && ok; ++n) {
        Int cnt = coeff_int(pieces[i], n);
        Int cap = component_bound(fam, i, Int(n));
        if (cnt > cap) {
          ok = false;
          d << "piece " << sp.minus_parts[i].name << " at n=" << n << ": "
            << cnt.get_str() << " solutions exceed the cap "
            << cap.get_str();
        }
      }
    }
    for (long n = 1; n < order && ok; ++n) {
      Int a = coeff_int(aser, n);
      Int cap = bound_a(fam, Int(n));
      if (a > cap) {
        ok = false;
        d << "n=" << n << ": a(n)=" << a.get_str()
          << " exceeds the ceiling " << cap.get_str();
      }
    }
    if (ok)
      d << "a(n) <= ceiling for 1 <= n <= " << order - 1
        << ", each of the four pieces within its own cap";
    push_step(rep, "a-upper-bound", ok, d.str(), cl);
  }

  /* (5) threshold: the integer floor beats the integer ceiling from n0 on,
   * checked across the finite sweep range */
  {
    StepClock cl;
    const long n0 = threshold_n0(fam);
    if (finite_bound < n0) {
      push_skipped(rep, "threshold-sweep",
                   "sweep bound below the threshold start n0=" +
                       std::to_string(n0));
    } else {
      bool ok = true;
      std::ostringstream d;
      for (std::uint64_t n = static_cast<std::uint64_t>(n0);
           n <= static_cast<std::uint64_t>(finite_bound) && ok; ++n) {
        if (bound_b_fast(fi, n) <= bound_a_fast(fi, n)) {
          ok = false;
          d << "floor(" << n << ")=" << bound_b_fast(fi, n)
            << " does not beat ceiling " << bound_a_fast(fi, n);
        } else if (fi == 0 && !real_threshold_14_fast(n)) {
          ok = false;
          d << "real-form threshold fails at n=" << n;
        }
      }
      /* the sweep runs on 64-bit mirrors; pin them to the big-integer
       * definitions at a few sampled points */
      for (long s : {n0, n0 + 1, (n0 + finite_bound) / 2, finite_bound}) {
        if (!ok) break;
        Int n(s);
        if (bound_a(fam, n) != static_cast<unsigned long>(
                                   bound_a_fast(fi, (std::uint64_t)s)) ||
            bound_b(fam, n) != static_cast<unsigned long>(
                                   bound_b_fast(fi, (std::uint64_t)s)) ||
            (fi == 0 && real_threshold_14(n) !=
                            real_threshold_14_fast((std::uint64_t)s))) {
          ok = false;
          d << "fast/exact bound mismatch at sampled n=" << s;
        }
      }
      if (ok) {
        d << "floor > ceiling on [" << n0 << ", " << finite_bound << "]";
        if (fi == 0) d << " and the real-form threshold holds there";
        d << "; finite range only - the tail is not certified here";
      }
      push_step(rep, "threshold-sweep", ok, d.str(), cl);
    }
  }

  /* (6) the explicit range below the threshold: coefficients themselves */
  {
    StepClock cl;
    long hi = (fi == 3) ? order - 1 : threshold_n0(fam) - 1;
    bool window_limited = hi > order - 1;
    if (window_limited) hi = order - 1;
    if (hi < 1) {
      push_skipped(rep, "finite-range",
                   "no base cases below the threshold");
    } else {
      /* Strict b(n) > a(n), every point in range; a non-strict point is a
       * step failure, but we still report whether the full assembled
       * bracket (product plus the signed bilateral sum) stays positive
       * there — the positive half of the split can cover the slack. */
      std::vector<long> bad;
      for (long n = 1; n <= hi; ++n)
        if (!(coeff_int(prod, n) > coeff_int(aser, n))) bad.push_back(n);
      bool ok = bad.empty();
      std::ostringstream d;
      if (ok) {
        d << "b(n) > a(n) for 1 <= n <= " << hi;
        if (fi == 2)
          d << " (b(1)=" << coeff_int(prod, 1).get_str()
            << ", a(1)=" << coeff_int(aser, 1).get_str() << ")";
        if (fi == 3) d << " (whole window: the bound argument has no gap)";
        if (window_limited) d << " (window-limited)";
      } else {
        LaurentSeries bracket =
            prod + bilateral().scaled(sp.bilateral_sign);
        bool first = true;
        for (long n : bad) {
          if (!first) d << "; ";
          first = false;
          d << "n=" << n << ": b(n)=" << coeff_int(prod, n).get_str()
            << " does not exceed a(n)=" << coeff_int(aser, n).get_str();
          rep.findings.push_back(
              "strictness gap at n=" + std::to_string(n) + ": b(n)=" +
              coeff_int(prod, n).get_str() + ", a(n)=" +
              coeff_int(aser, n).get_str() +
              ", assembled bracket coefficient " +
              rat_to_string(bracket.coeff(n)) +
              " (the positive split components cover the slack)");
          if (bad.size() > 8 && n == bad[7]) {
            d << "; ... (" << bad.size() << " points total)";
            break;
          }
        }
      }
      push_step(rep, "finite-range", ok, d.str(), cl);
    }
  }

  /* (7) the assembled series is positive where the claim says so */
  LaurentSeries rhs = LaurentSeries::zero(order);
  {
    StepClock cl;
    bool ok = true;
    std::ostringstream d;
    LaurentSeries pref = family_prefactor_inv(fam).eval(order);
    rhs = pref * (prod + bilateral().scaled(sp.bilateral_sign));
    if (rhs.coeff(0) != shape.constant) {
      ok = false;
      d << "value at n=0 is " << rat_to_string(rhs.coeff(0)) << ", expected "
        << rat_to_string(shape.constant);
    }
    long zeros = 0;
    for (long n = 1; n < order && ok; ++n) {
      const Rat& c = rhs.coeff(n);
      if (c.get_den() != 1) {
        ok = false;
        d << "non-integer coefficient at q^" << n << ": " << rat_to_string(c);
        break;
      }
      if (c <= 0) {
        if (c == 0) ++zeros;
        ok = false;
        d << "coefficient at q^" << n << " is " << rat_to_string(c)
          << ", expected strictly positive";
        if (c == 0 && fi == 1)
          rep.findings.push_back(
              "equality instance: the 1.5 series vanishes at n=" +
              std::to_string(n) +
              " (the weak form of the claim still holds there)");
        break;
      }
    }
    if (ok) {
      d << "strictly positive integer coefficients for 1 <= n < " << order
        << ", value " << rat_to_string(rhs.coeff(0)) << " at n=0";
      if (fi == 1)
        rep.findings.push_back(
            "no equality instances for 1 <= n < " + std::to_string(order) +
            ": the strict form of the claim holds on the window");
    }
    push_step(rep, "positivity", ok, d.str(), cl);
  }

  /* (8) the oracle agrees: series equality and the literal inequality */
  {
    StepClock cl;
    bool ok = true;
    std::ostringstream d;
    const RankTable& t = oracle_table();
    rep.oracle_order = t.n_max;
    LaurentSeries diff =
        rank_diff_series(t, shape.plus, shape.minus, shape.r, 5);
    long w = std::min(diff.order(), order);
    auto mm = LaurentSeries::first_mismatch(rhs, diff, w);
    if (mm) {
      ok = false;
      d << "assembled series disagrees with the "
        << (shape.kind == RankKind::Dyson ? "DP" : "enumeration")
        << " oracle: " << mm_witness(*mm);
    } else {
      long checked = 0;
      for (long n = shape.strict_from; n < diff.order() && ok; ++n) {
        ++checked;
        if (diff.coeff(n) <= 0) {
          ok = false;
          d << "oracle rank difference at n=" << n << " (base exponent "
            << 5 * n + shape.r << ") is " << rat_to_string(diff.coeff(n))
            << ", expected > 0";
        }
      }
      if (ok)
        d << "matches the "
          << (shape.kind == RankKind::Dyson ? "DP" : "enumeration")
          << " oracle below q^" << w << "; inequality verified at "
          << checked << " oracle points (base exponents to " << t.n_max
          << ")";
    }
    push_step(rep, "oracle-check", ok, d.str(), cl);
  }

  return rep;
}

/* ------------------------------------------------------------------ */
/* open-question probes: oracle only, explicitly not a proof           */

namespace {

struct ProbeShape {
  long m;     // rank modulus
  long r;     // base exponent progression r + step*n
  long step;
  std::vector<long> plus, minus;
  long from;  // first n the claim covers
};

const ProbeShape& probe_shape(TargetId id) {
  static const std::map<TargetId, ProbeShape> k = {
      {TargetId::C18, {10, 0, 5, {1, 2}, {3, 4}, 1}},
      {TargetId::C19, {10, 2, 5, {1, 2}, {3, 4}, 1}},
      {TargetId::C110, {6, 2, 3, {0, 1}, {2, 3}, 0}},
  };
  auto it = k.find(id);
  if (it == k.end()) throw DomainError("not a probe id");
  return it->second;
}

}  // namespace

ProofReport probe_open(TargetId id, long n_max) {
  if (!is_probe(id)) throw DomainError("probe_open expects a 1.8-1.10 id");
  if (n_max < 10) throw DomainError("n_max < 10 leaves nothing to probe");
  const ProbeShape& ps = probe_shape(id);

  ProofReport rep;
  rep.id = id;
  rep.order = n_max;
  rep.oracle_order = n_max;
  rep.finite_bound = 0;
  rep.evidence_only = true;

  StepClock cl;
  RankTable t = rank_table_enum(RankKind::M2, ps.m, n_max);
  LaurentSeries diff = rank_diff_series(t, ps.plus, ps.minus, ps.r, ps.step);
  long checked = 0;
  long violations = 0;
  for (long n = ps.from; n < diff.order(); ++n) {
    ++checked;
    if (diff.coeff(n) <= 0) {
      ++violations;
      rep.findings.push_back(
          "VIOLATION at n=" + std::to_string(n) + " (base exponent " +
          std::to_string(ps.step * n + ps.r) +
          "): difference = " + rat_to_string(diff.coeff(n)));
    }
  }
  std::ostringstream d;
  d << "numeric evidence, not proof: strict inequality checked at "
    << checked << " oracle points (base exponents " << ps.step << "n+"
    << ps.r << " <= " << n_max << "), " << violations << " violation(s)";
  for (long n = 0; n < ps.from && n < diff.order(); ++n)
    d << "; n=" << n << " excluded by the claim (difference there is "
      << rat_to_string(diff.coeff(n)) << ")";
  /* A violation is a reportable discovery, not a broken pipeline: the step
   * stays green and the finding carries the witness. */
  push_step(rep, "oracle-probe", true, d.str(), cl);
  return rep;
}

}  // namespace qrank
