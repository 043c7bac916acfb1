#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrank/lambert.hpp"
#include "qrank/partitions.hpp"
#include "qrank/qproducts.hpp"
#include "qrank/series.hpp"

namespace qrank {

/* Everything the toolkit can verify or probe. The "1.x" ids are the four
 * proved rank-difference inequalities (1.4-1.7) and the three open ones
 * (1.8-1.10, numeric checks only); the T ids are the underlying
 * rank-difference identities whose five-block right-hand sides we rebuild. */
enum class TargetId {
  C14, C15, C16, C17,   // proved inequalities
  C18, C19, C110,       // open inequalities, probe only
  T22a, T22b, T23       // identities with five q^i blocks
};

std::string target_name(TargetId id);
std::optional<TargetId> target_from_name(const std::string& name);
bool is_conjecture(TargetId id);   // 1.4-1.7
bool is_probe(TargetId id);        // 1.8-1.10
bool is_theorem(TargetId id);      // T2.2a/T2.2b/T2.3

enum class StepStatus { Pass, Fail, Skipped };

struct StepResult {
  std::string name;
  StepStatus status = StepStatus::Pass;
  std::string detail;      // on Fail: a concrete witness (exponent/values)
  double seconds = 0.0;
};

struct ProofReport {
  TargetId id;
  long order = 0;
  long oracle_order = 0;
  long finite_bound = 0;
  bool evidence_only = false;  // probes: numeric evidence, not proof
  std::vector<StepResult> steps;
  std::vector<std::string> findings;  // probe violations, equality notes, ...

  bool passed() const;
};

/* The fully dissected generating function for one inequality family,
 * prefactor included: series of the rank differences at 5n (+4). */
LaurentSeries rhs_series(const std::string& family, long order);

/* The family's product part alone (the b-series source). */
LaurentSeries product_series(const std::string& family, long order);

/* The five-block right-hand side of one identity, assembled with its
 * bilateral sums and q^(+-5) scalings; window [min valuation, order). */
LaurentSeries theorem_rhs(TargetId id, long order);
/* One block (0..4) before the q^i shift, window as computed. */
LaurentSeries theorem_block(TargetId id, int block, long order);

/* Identity check against the brute-force oracle (DP for the Dyson rank,
 * enumeration for M2), plus the dissection-consistency step. */
ProofReport verify_theorem(TargetId id, long order);

/* The full argument for one proved inequality, steps (1)-(8); see the step
 * names in the report. order <= 0 picks the family default (400 for
 * 1.4/1.5, 300 for 1.6/1.7). */
ProofReport verify_conjecture(TargetId id, long order = 0,
                              long finite_bound = 1000000,
                              long oracle_order = 0);

/* Oracle-only evaluation of an open inequality; the report is labeled
 * numeric evidence. Violations are findings, not failures. */
ProofReport probe_open(TargetId id, long n_max = 80);

/* Defaults used when order/oracle_order are not given. */
long default_order(TargetId id);
long default_oracle_order(TargetId id);

}  // namespace qrank
