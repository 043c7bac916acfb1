#include <string>
#include <vector>

#include "doctest.h"
#include "qrank/proofcheck.hpp"

using namespace qrank;

namespace {

const StepResult* find_step(const ProofReport& r, const std::string& name) {
  for (const StepResult& s : r.steps)
    if (s.name == name) return &s;
  return nullptr;
}

bool has_finding(const ProofReport& r, const std::string& needle) {
  for (const std::string& f : r.findings)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("target names round-trip and classify into disjoint kinds") {
  const TargetId all[] = {TargetId::C14,  TargetId::C15, TargetId::C16,
                          TargetId::C17,  TargetId::C18, TargetId::C19,
                          TargetId::C110, TargetId::T22a, TargetId::T22b,
                          TargetId::T23};
  for (TargetId id : all) {
    auto back = target_from_name(target_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
    int kinds = int(is_conjecture(id)) + int(is_probe(id)) + int(is_theorem(id));
    CHECK(kinds == 1);
  }
  CHECK(target_name(TargetId::C14) == "1.4");
  CHECK(target_name(TargetId::T22a) == "T2.2a");
  CHECK(target_name(TargetId::C110) == "1.10");
  CHECK_FALSE(target_from_name("9.9").has_value());
  CHECK_FALSE(target_from_name("").has_value());
}

TEST_CASE("window defaults by target") {
  CHECK(default_order(TargetId::C14) == 400);
  CHECK(default_order(TargetId::C15) == 400);
  CHECK(default_order(TargetId::C16) == 300);
  CHECK(default_order(TargetId::C17) == 300);
  CHECK(default_order(TargetId::T22a) == 200);
  CHECK(default_order(TargetId::C18) == 80);
  CHECK(default_oracle_order(TargetId::C14) == 300);
  CHECK(default_oracle_order(TargetId::T22b) == 200);
  CHECK(default_oracle_order(TargetId::C17) == 80);
}

TEST_CASE("product series: constants and first coefficients") {
  CHECK(product_series("1.4", 20).coeff(0) == 1);
  CHECK(product_series("1.5", 20).coeff(0) == 0);
  CHECK(product_series("1.5", 20).coeff(1) == 2);
  CHECK(product_series("1.6", 20).coeff(0) == 0);
  CHECK(product_series("1.6", 20).coeff(1) == 2);
  CHECK(product_series("1.7", 20).coeff(0) == 2);
  CHECK_THROWS_AS(product_series("1.8", 20), DomainError);
}

TEST_CASE("assembled series match the brute-force tables on all families") {
  RankTable dy = rank_table_dp(10, 100);
  LaurentSeries o14 = rank_diff_series(dy, {0, 1}, {4, 5}, 0, 5);
  LaurentSeries o15 = rank_diff_series(dy, {1, 2}, {3, 4}, 0, 5);
  CHECK(LaurentSeries::eq_upto(rhs_series("1.4", 21), o14, 21));
  CHECK(LaurentSeries::eq_upto(rhs_series("1.5", 21), o15, 21));

  RankTable m2 = rank_table_enum(RankKind::M2, 10, 100);
  LaurentSeries o16 = rank_diff_series(m2, {0, 1}, {4, 5}, 0, 5);
  LaurentSeries o17 = rank_diff_series(m2, {0, 1}, {4, 5}, 4, 5);
  CHECK(LaurentSeries::eq_upto(rhs_series("1.6", 21), o16, 21));
  CHECK(LaurentSeries::eq_upto(rhs_series("1.7", 20), o17, 20));

  const long first[12] = {1, 1, 3, 4, 7, 11, 16, 23, 33, 45, 63, 86};
  LaurentSeries g1 = rhs_series("1.4", 12);
  for (long n = 0; n < 12; ++n) CHECK(g1.coeff(n) == first[n]);
  CHECK(rhs_series("1.7", 12).coeff(0) == 2);
}

TEST_CASE("five-block sums equal the direct rank differences") {
  RankTable dy = rank_table_dp(10, 59);
  CHECK(LaurentSeries::eq_upto(theorem_rhs(TargetId::T22a, 60),
                               rank_diff_series(dy, {0, 1}, {4, 5}, 0, 1), 60));
  CHECK(LaurentSeries::eq_upto(theorem_rhs(TargetId::T22b, 60),
                               rank_diff_series(dy, {1, 2}, {3, 4}, 0, 1), 60));
  RankTable m2 = rank_table_enum(RankKind::M2, 10, 59);
  CHECK(LaurentSeries::eq_upto(theorem_rhs(TargetId::T23, 60),
                               rank_diff_series(m2, {0, 1}, {4, 5}, 0, 1), 60));
}

TEST_CASE("theorem evaluators validate their arguments") {
  CHECK_THROWS_AS(theorem_rhs(TargetId::C14, 60), DomainError);
  CHECK_THROWS_AS(theorem_rhs(TargetId::T22a, 5), DomainError);
  CHECK_THROWS_AS(theorem_block(TargetId::T22a, 5, 60), DomainError);
  CHECK_THROWS_AS(theorem_block(TargetId::T22a, -1, 60), DomainError);
  CHECK_THROWS_AS(theorem_block(TargetId::C16, 0, 60), DomainError);
  CHECK_NOTHROW(theorem_block(TargetId::T22a, 0, 30));
}

TEST_CASE("identity pipelines pass") {
  for (TargetId id : {TargetId::T22a, TargetId::T22b, TargetId::T23}) {
    ProofReport r = verify_theorem(id, 40);
    CAPTURE(target_name(id));
    CHECK(r.passed());
    REQUIRE(r.steps.size() == 3);
    CHECK(r.steps[0].name == "oracle-identity");
    CHECK(r.steps[1].name == "block-dissection");
    CHECK(r.steps[2].name == "family-extraction");
    CHECK_FALSE(r.evidence_only);
  }
  CHECK_THROWS_AS(verify_theorem(TargetId::T22a, 24), DomainError);
  CHECK_THROWS_AS(verify_theorem(TargetId::C14, 60), DomainError);
}

TEST_CASE("first family: every step but the finite range check holds") {
  ProofReport r = verify_conjecture(TargetId::C14, 60, 100000, 60);
  CHECK_FALSE(r.passed());
  CHECK(r.order == 60);
  CHECK(r.finite_bound == 100000);
  CHECK_FALSE(r.evidence_only);
  REQUIRE(r.steps.size() == 8);
  for (const StepResult& s : r.steps) {
    CAPTURE(s.name);
    CAPTURE(s.detail);
    if (s.name == "finite-range")
      CHECK(s.status == StepStatus::Fail);
    else
      CHECK(s.status == StepStatus::Pass);
  }
  const StepResult* fr = find_step(r, "finite-range");
  REQUIRE(fr != nullptr);
  CHECK(fr->detail.find("n=1") != std::string::npos);
  CHECK(has_finding(r, "strictness gap at n=1"));
  CHECK(has_finding(r, "bracket coefficient 1"));
}

TEST_CASE("second family: same shape of failure, two positions later") {
  ProofReport r = verify_conjecture(TargetId::C15, 60, 100000, 60);
  CHECK_FALSE(r.passed());
  const StepResult* fr = find_step(r, "finite-range");
  REQUIRE(fr != nullptr);
  CHECK(fr->status == StepStatus::Fail);
  CHECK(fr->detail.find("n=2") != std::string::npos);
  CHECK(has_finding(r, "strictness gap at n=2"));
  // every coefficient of the assembled series itself is still positive
  const StepResult* pos = find_step(r, "positivity");
  REQUIRE(pos != nullptr);
  CHECK(pos->status == StepStatus::Pass);
  CHECK(has_finding(r, "no equality instances"));
}

TEST_CASE("third family: full pass, and stable when the window grows") {
  const char* names[8] = {"split",           "product-expansion",
                          "b-lower-bound",   "a-upper-bound",
                          "threshold-sweep", "finite-range",
                          "positivity",      "oracle-check"};
  for (long order : {60L, 120L}) {
    ProofReport r = verify_conjecture(TargetId::C16, order, 100000, 60);
    CAPTURE(order);
    CHECK(r.passed());
    REQUIRE(r.steps.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(r.steps[i].name == names[i]);
  }
}

TEST_CASE("fourth family: reading arbitration settles on one expansion") {
  ProofReport r = verify_conjecture(TargetId::C17, 60, 100000, 60);
  CHECK(r.passed());
  CHECK(r.oracle_order == 104);  // widened so the two readings separate
  CHECK(has_finding(r, "period 20"));
  CHECK(has_finding(r, "confirms"));
  const StepResult* pe = find_step(r, "product-expansion");
  REQUIRE(pe != nullptr);
  CHECK(pe->detail.find("constant term 2") != std::string::npos);
  CHECK(pe->detail.find("constant is 1") != std::string::npos);
}

TEST_CASE("gap witnesses replay from the raw pieces") {
  // first family at n = 1: the product has no linear term, and no
  // subtracted piece reaches exponent 1 either
  CHECK(product_series("1.4", 3).coeff(1) == 0);
  {
    const SumSplit& sp = family_split("1.4");
    Rat a1 = 0;
    for (const LambertComponent& c : sp.minus_parts)
      a1 += expand_component(c, 2).coeff(1);
    CHECK(a1 == 0);
  }
  // second family at n = 2
  CHECK(product_series("1.5", 4).coeff(2) == 0);
  {
    const SumSplit& sp = family_split("1.5");
    Rat a2 = 0;
    for (const LambertComponent& c : sp.minus_parts)
      a2 += expand_component(c, 3).coeff(2);
    CHECK(a2 == 0);
  }
  // and the surviving margins right next to the gaps
  CHECK(product_series("1.5", 3).coeff(1) == 2);
  CHECK(rhs_series("1.4", 3).coeff(1) == 1);
  CHECK(rhs_series("1.5", 4).coeff(2) == 1);
}

TEST_CASE("open-question probes are labeled evidence, never proof") {
  for (TargetId id : {TargetId::C18, TargetId::C19, TargetId::C110}) {
    ProofReport r = probe_open(id, 60);
    CAPTURE(target_name(id));
    CHECK(r.evidence_only);
    CHECK(r.passed());
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].name == "oracle-probe");
    CHECK(r.steps[0].detail.find("numeric evidence, not proof") != std::string::npos);
  }
  CHECK_THROWS_AS(probe_open(TargetId::C14, 80), DomainError);
  CHECK_THROWS_AS(probe_open(TargetId::C18, 9), DomainError);
}

TEST_CASE("pipeline argument validation") {
  CHECK_THROWS_AS(verify_conjecture(TargetId::C14, 29), DomainError);
  CHECK_THROWS_AS(verify_conjecture(TargetId::T22a, 60), DomainError);
  CHECK_THROWS_AS(verify_conjecture(TargetId::C18, 60), DomainError);
}
