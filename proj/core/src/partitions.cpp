#include "qrank/partitions.hpp"

#include <algorithm>

namespace qrank {

namespace {

void enum_rec(long remaining, long max_part, Partition& acc,
              const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(acc);
    return;
  }
  for (long p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enum_rec(remaining - p, p, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

void enumerate_partitions(long n,
                          const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw DomainError("enumerate_partitions requires n >= 0");
  Partition acc;
  if (n == 0) {
    visit(acc);
    return;
  }
  enum_rec(n, n, acc, visit);
}

std::vector<Partition> partitions_of(long n) {
  std::vector<Partition> out;
  enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long dyson_rank(const Partition& p) {
  if (p.empty()) throw DomainError("rank of the empty partition is undefined");
  return p.front() - static_cast<long>(p.size());
}

long m2_rank(const Partition& p) {
  if (p.empty()) throw DomainError("rank of the empty partition is undefined");
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] == p[i - 1] && p[i] % 2 != 0)
      throw DomainError("m2 rank needs distinct odd parts");
  long l = p.front();
  return (l + 1) / 2 - static_cast<long>(p.size());
}

const Int& RankTable::at(long s, long n) const {
  if (s < 0 || s >= modulus || n < 0 || n > n_max)
    throw WindowError("rank table access out of range");
  return counts[static_cast<size_t>(s)][static_cast<size_t>(n)];
}

Int RankTable::column_total(long n) const {
  Int t = 0;
  for (long s = 0; s < modulus; ++s) t += at(s, n);
  return t;
}

namespace {

/* Shared DFS for rank_table_enum: walk weakly decreasing part sequences with
 * total <= n_max; every node of the walk is a partition of its running sum.
 * `largest` is fixed once the first part is chosen, so the rank residue at a
 * node only needs the depth. Rank values can be negative: reduce into
 * [0, m) with a true floor mod. */
struct EnumState {
  RankKind kind;
  long m, n_max;
  std::vector<std::vector<Int>>* counts;
};

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void enum_table_rec(EnumState& st, long sum, long prev_part, long largest,
                    long depth) {
  long head = (st.kind == RankKind::Dyson) ? largest : (largest + 1) / 2;
  long s = mod_floor(head - depth, st.m);
  (*st.counts)[static_cast<size_t>(s)][static_cast<size_t>(sum)] += 1;
  for (long p = std::min(prev_part, st.n_max - sum); p >= 1; --p) {
    if (st.kind == RankKind::M2 && p == prev_part && p % 2 != 0)
      continue;  // a repeated odd part is not allowed in the M2 universe
    enum_table_rec(st, sum + p, p, largest, depth + 1);
  }
}

}  // namespace

RankTable rank_table_enum(RankKind kind, long m, long n_max) {
  if (m < 2) throw DomainError("rank table modulus must be >= 2");
  if (n_max < 0) throw DomainError("rank table requires n_max >= 0");
  /* The walk visits every partition (resp. every distinct-odd-part
   * partition) of every n <= n_max, so the cost is the partial sum of p(n)
   * (resp. pod(n)). The caps keep a single call to a few seconds. */
  const long cap = (kind == RankKind::Dyson) ? 100 : 150;
  if (n_max > cap) {
    throw ResourceError("enumeration table infeasible at n_max = " +
                        std::to_string(n_max) + "; use n_max <= " +
                        std::to_string(cap) +
                        (kind == RankKind::Dyson ? " (or the DP table)" : ""));
  }
  RankTable t{kind, m, n_max,
              std::vector<std::vector<Int>>(
                  static_cast<size_t>(m),
                  std::vector<Int>(static_cast<size_t>(n_max + 1), Int(0)))};
  t.counts[0][0] = 1;  // the empty partition, rank residue 0 by convention
  EnumState st{kind, m, n_max, &t.counts};
  for (long first = 1; first <= n_max; ++first)
    enum_table_rec(st, first, first, first, 1);
  return t;
}

RankTable rank_table_dp(long m, long n_max) {
  if (m < 2) throw DomainError("rank table modulus must be >= 2");
  if (n_max < 0) throw DomainError("rank table requires n_max >= 0");
  if (n_max > 5000)
    throw ResourceError("DP table infeasible at n_max = " +
                        std::to_string(n_max) + "; use n_max <= 5000");
  RankTable t{RankKind::Dyson, m, n_max,
              std::vector<std::vector<Int>>(
                  static_cast<size_t>(m),
                  std::vector<Int>(static_cast<size_t>(n_max + 1), Int(0)))};
  t.counts[0][0] = 1;
  /* B[c][n] = partitions of n into parts <= current l with part count = c
   * mod m. Ascending n inside the l-pass realizes "any number of copies of
   * l". After each pass, partitions of n with largest part exactly l are the
   * B-partitions of n-l (their parts are <= l), each gaining the new largest
   * part: count c becomes c+1, rank l - (c+1) ... here expressed as
   * l - 1 - c mod m. */
  std::vector<std::vector<Int>> B(
      static_cast<size_t>(m),
      std::vector<Int>(static_cast<size_t>(n_max + 1), Int(0)));
  B[0][0] = 1;
  for (long l = 1; l <= n_max; ++l) {
    for (long n = l; n <= n_max; ++n)
      for (long c = 0; c < m; ++c) {
        const Int& src = B[static_cast<size_t>(mod_floor(c - 1, m))]
                          [static_cast<size_t>(n - l)];
        if (src != 0) B[static_cast<size_t>(c)][static_cast<size_t>(n)] += src;
      }
    for (long n = l; n <= n_max; ++n)
      for (long c = 0; c < m; ++c) {
        const Int& src = B[static_cast<size_t>(c)][static_cast<size_t>(n - l)];
        if (src != 0)
          t.counts[static_cast<size_t>(mod_floor(l - 1 - c, m))]
                  [static_cast<size_t>(n)] += src;
      }
  }
  return t;
}

LaurentSeries rank_diff_series(const RankTable& t, const std::vector<long>& plus,
                               const std::vector<long>& minus, long r,
                               long step) {
  if (step < 1 || r < 0) throw DomainError("progression needs r >= 0, step >= 1");
  if (r > t.n_max) throw WindowError("progression start beyond table range");
  long count = (t.n_max - r) / step + 1;
  std::vector<Rat> c(static_cast<size_t>(count));
  for (long n = 0; n < count; ++n) {
    Int d = 0;
    for (long s : plus) d += t.at(s, r + step * n);
    for (long s : minus) d -= t.at(s, r + step * n);
    c[static_cast<size_t>(n)] = Rat(d);
  }
  return LaurentSeries::from_coeffs(0, std::move(c));
}

std::vector<Int> partition_counts(long n_max) {
  /* Parts <= l DP; P[n] accumulates unbounded parts up to n_max. */
  std::vector<Int> P(static_cast<size_t>(n_max + 1), Int(0));
  P[0] = 1;
  for (long l = 1; l <= n_max; ++l)
    for (long n = l; n <= n_max; ++n)
      P[static_cast<size_t>(n)] += P[static_cast<size_t>(n - l)];
  return P;
}

bool CheckReport::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& i) { return i.pass; });
}

CheckReport check_classical(long n_max) {
  CheckReport rep;
  auto p = partition_counts(n_max);
  auto divisibility = [&](long res, long mod) {
    for (long n = res; n <= n_max; n += mod)
      if (p[static_cast<size_t>(n)] % mod != 0)
        return CheckItem{"p(" + std::to_string(mod) + "n+" + std::to_string(res) +
                             ") mod " + std::to_string(mod),
                         false, "fails at n=" + std::to_string(n)};
    return CheckItem{"p(" + std::to_string(mod) + "n+" + std::to_string(res) +
                         ") mod " + std::to_string(mod),
                     true, ""};
  };
  rep.items.push_back(divisibility(4, 5));
  rep.items.push_back(divisibility(5, 7));
  rep.items.push_back(divisibility(6, 11));

  /* Rank residues are equidistributed on those progressions for mod 5 and
   * mod 7: every residue class gets exactly p(n)/mod partitions. */
  for (long mod : {5L, 7L}) {
    long res = mod == 5 ? 4 : 5;
    auto table = rank_table_dp(mod, n_max);
    bool ok = true;
    std::string detail;
    for (long n = res; n <= n_max && ok; n += mod) {
      Int share = p[static_cast<size_t>(n)] / mod;
      for (long s = 0; s < mod; ++s)
        if (table.at(s, n) != share) {
          ok = false;
          detail = "residue " + std::to_string(s) + " at n=" + std::to_string(n) +
                   ": " + table.at(s, n).get_str() + " != " + share.get_str();
          break;
        }
    }
    rep.items.push_back(CheckItem{"rank equidistribution mod " + std::to_string(mod),
                                  ok, detail});
  }
  return rep;
}

}  // namespace qrank
