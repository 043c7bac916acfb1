#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qrank/series.hpp"

namespace qrank {

/* Parts in weakly decreasing order; the empty vector is the empty partition
 * of 0. Partitions are only ever produced through enumerate_partitions, so
 * ordering and validity are structural. */
using Partition = std::vector<long>;

/* Visit every partition of exactly n in descending lexicographic order of
 * the part vectors ((n), (n-1,1), ..., (1,...,1)). n >= 0; n = 0 visits the
 * empty partition once. */
void enumerate_partitions(long n, const std::function<void(const Partition&)>& visit);

/* Collecting convenience for small n (tests, spot checks). */
std::vector<Partition> partitions_of(long n);

/* largest part minus number of parts. DomainError on the empty partition. */
long dyson_rank(const Partition& p);

/* ceil(largest/2) minus number of parts, defined on partitions without
 * repeated odd parts. DomainError on the empty partition or a repeated odd. */
long m2_rank(const Partition& p);

enum class RankKind { Dyson, M2 };

/* counts[s][n] = number of partitions of n with rank congruent to s mod m,
 * 0 <= s < m, 0 <= n <= n_max. Counts are exact big integers (the totals are
 * partition numbers, which leave 64 bits around n ~ 400). Column n = 0
 * counts the empty partition at s = 0 for both kinds. For M2, only
 * partitions without repeated odd parts exist in the counts. */
struct RankTable {
  RankKind kind;
  long modulus;
  long n_max;
  std::vector<std::vector<Int>> counts;  // [s][n]

  const Int& at(long s, long n) const;
  /* sum over s of counts[s][n] */
  Int column_total(long n) const;
};

/* Direct enumeration oracle: one depth-first walk over weakly decreasing
 * part sequences with sum <= n_max (every prefix is itself a partition), so
 * all columns fill in a single pass. ResourceError beyond the documented
 * budget (n_max 100 for Dyson, 150 for M2). */
RankTable rank_table_enum(RankKind kind, long m, long n_max);

/* Independent dynamic program for the Dyson kind, no enumeration and no
 * q-series identities: with B_l(n, c) = #{partitions of n, parts <= l, part
 * count = c mod m}, extending by largest part exactly l adds B_l(n-l, c)
 * partitions of n with rank = l - 1 - c mod m. O(n_max^2 m) big-int adds;
 * ResourceError above n_max 5000. */
RankTable rank_table_dp(long m, long n_max);

/* Series of counts(plus) - counts(minus) along the progression r + step*n,
 * n = 0, 1, ...; window [0, floor((n_max - r)/step) + 1). */
LaurentSeries rank_diff_series(const RankTable& t,
                               const std::vector<long>& plus,
                               const std::vector<long>& minus, long r,
                               long step);

/* p(n) for 0 <= n <= n_max via the bounded-largest-part DP (column totals),
 * independent of any series identity. */
std::vector<Int> partition_counts(long n_max);

struct CheckItem {
  std::string name;
  bool pass;
  std::string detail;
};
struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

/* Classical sanity layer: the three arithmetic-progression divisibilities of
 * p(n) (mod 5 at 5n+4, mod 7 at 7n+5, mod 11 at 11n+6) and the residue
 * equidistribution of the rank mod 5 at 5n+4 and mod 7 at 7n+5, checked for
 * every reachable n <= n_max. */
CheckReport check_classical(long n_max);

}  // namespace qrank
