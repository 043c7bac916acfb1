/* qrank — exact q-series toolkit for partition rank inequalities.
 *
 * Subcommands:
 *   verify <id>...     run a verification pipeline (1.4-1.7, 1.8-1.10, T2.*)
 *   series <expr>      dump the exact coefficients of a named series
 *   ranktable <kind>   dump a rank-count table (CSV or JSON)
 *
 * Exit codes: 0 pass, 1 verified failure, 2 usage error, 3 resource limit.
 * Everything is exact rational arithmetic; there is no randomness anywhere,
 * so runs are deterministic (timestamps in JSON documents aside).
 */

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qrank/lambert.hpp"
#include "qrank/partitions.hpp"
#include "qrank/proofcheck.hpp"
#include "qrank/qproducts.hpp"
#include "qrank/series.hpp"

using json = nlohmann::ordered_json;
using namespace qrank;

namespace {

constexpr const char* kSchemaVersion = "1.0";

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

/* ------------------------------------------------------------------ */
/* verify                                                              */

const char* status_str(StepStatus s) {
  switch (s) {
    case StepStatus::Pass:
      return "pass";
    case StepStatus::Fail:
      return "fail";
    default:
      return "skipped";
  }
}

std::string report_status(const ProofReport& r) {
  if (r.evidence_only) return "numeric-evidence";
  return r.passed() ? "pass" : "fail";
}

json report_to_json(const ProofReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"name", s.name},
                     {"status", status_str(s.status)},
                     {"detail", s.detail},
                     {"seconds", s.seconds}});
  return json{{"id", target_name(r.id)},
              {"status", report_status(r)},
              {"order", r.order},
              {"oracle_order", r.oracle_order},
              {"finite_bound", r.finite_bound},
              {"steps", steps},
              {"findings", r.findings}};
}

void report_to_text(std::ostream& os, const ProofReport& r) {
  os << "target " << target_name(r.id) << ": ";
  std::string st = report_status(r);
  for (char c : st) os << static_cast<char>(std::toupper(c));
  os << " (order " << r.order << ", oracle window " << r.oracle_order;
  if (r.finite_bound > 0) os << ", sweep bound " << r.finite_bound;
  os << ")\n";
  for (const auto& s : r.steps) {
    std::ostringstream secs;
    secs.setf(std::ios::fixed);
    secs.precision(3);
    secs << s.seconds;
    os << "  [" << status_str(s.status) << "] " << s.name;
    for (size_t i = s.name.size(); i < 18; ++i) os << ' ';
    os << ' ' << secs.str() << "s  " << s.detail << "\n";
  }
  for (const auto& f : r.findings) os << "  finding: " << f << "\n";
}

int cmd_verify(const std::vector<std::string>& ids, long order,
               long finite_bound, long n_max, const std::string& format,
               const std::string& out) {
  std::vector<ProofReport> reports;
  for (const auto& name : ids) {
    auto id = target_from_name(name);
    if (!id) {
      std::cerr << "unknown verification target: " << name << "\n";
      return 2;
    }
    if (is_probe(*id))
      reports.push_back(probe_open(*id, n_max > 0 ? n_max : 80));
    else if (is_theorem(*id))
      reports.push_back(
          verify_theorem(*id, order > 0 ? order : default_order(*id)));
    else
      reports.push_back(verify_conjecture(*id, order, finite_bound, n_max));
  }

  bool all_ok = true;
  for (const auto& r : reports)
    if (!r.evidence_only && !r.passed()) all_ok = false;

  if (format == "json") {
    json results = json::array();
    for (const auto& r : reports) results.push_back(report_to_json(r));
    json doc{{"schema_version", kSchemaVersion},
             {"generated_at", iso_timestamp()},
             {"command",
              {{"name", "verify"},
               {"ids", ids},
               {"order", order},
               {"finite_bound", finite_bound},
               {"n_max", n_max}}},
             {"results", results},
             {"overall_status", all_ok ? "pass" : "fail"}};
    emit(doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) report_to_text(os, r);
    os << "overall: " << (all_ok ? "PASS" : "FAIL") << "\n";
    emit(os.str(), out);
  }
  return all_ok ? 0 : 1;
}

/* ------------------------------------------------------------------ */
/* series                                                              */

/* Expression ids:
 *   gen1..gen4          assembled rank-difference series for 1.4..1.7
 *   J_5, J_2_10, L_3_10 the named infinite products (J_b, J_{a,b}, L_{a,b})
 *   S1@1.4 .. T4@1.7    one unilateral component of a family's sum split
 *   T2.2a, T2.2b, T2.3  full five-block right-hand side of an identity
 *   T2.2a.0 .. T2.3.4   a single block (before its q^i shift)
 */
LaurentSeries resolve_series(const std::string& id, long order) {
  static const char* kGenFamily[] = {"1.4", "1.5", "1.6", "1.7"};
  if (id.size() == 4 && id.rfind("gen", 0) == 0 && id[3] >= '1' &&
      id[3] <= '4')
    return rhs_series(kGenFamily[id[3] - '1'], order);

  if (id.rfind("J_", 0) == 0 || id.rfind("L_", 0) == 0) {
    std::vector<long> parts;
    std::stringstream ss(id.substr(2));
    std::string tok;
    while (std::getline(ss, tok, '_')) parts.push_back(std::stol(tok));
    if (id[0] == 'J' && parts.size() == 1) return J(parts[0], order);
    if (id[0] == 'J' && parts.size() == 2)
      return Jab(parts[0], parts[1], order);
    if (id[0] == 'L' && parts.size() == 2)
      return Lab(parts[0], parts[1], order);
    throw DomainError("unknown series id: " + id);
  }

  if (auto at = id.find('@'); at != std::string::npos) {
    const std::string comp = id.substr(0, at);
    const std::string fam = id.substr(at + 1);
    const SumSplit& sp = family_split(fam);  // DomainError if unknown
    for (const auto& c : sp.plus_parts)
      if (c.name == comp) return expand_component(c, order);
    for (const auto& c : sp.minus_parts)
      if (c.name == comp) return expand_component(c, order);
    throw DomainError("unknown component " + comp + " in family " + fam);
  }

  if (id.rfind("T2.", 0) == 0) {
    std::string base = id;
    int block = -1;
    if (auto dot = id.find('.', 3); dot != std::string::npos) {
      base = id.substr(0, dot);
      const std::string tail = id.substr(dot + 1);
      if (tail.size() != 1 || tail[0] < '0' || tail[0] > '4')
        throw DomainError("block index must be 0..4 in: " + id);
      block = tail[0] - '0';
    }
    auto t = target_from_name(base);
    if (t && is_theorem(*t))
      return block < 0 ? theorem_rhs(*t, order)
                       : theorem_block(*t, block, order);
  }

  throw DomainError("unknown series id: " + id);
}

int cmd_series(const std::string& id, long order, const std::string& format,
               const std::string& out) {
  LaurentSeries s = resolve_series(id, order);
  if (format == "json") {
    json coeffs = json::array();
    for (long n = s.valuation(); n < s.order(); ++n)
      coeffs.push_back({{"exponent", n}, {"value", rat_to_string(s.coeff(n))}});
    json doc{{"schema_version", kSchemaVersion},
             {"generated_at", iso_timestamp()},
             {"command", {{"name", "series"}, {"id", id}, {"order", order}}},
             {"valuation", s.valuation()},
             {"order", s.order()},
             {"coefficients", coeffs}};
    emit(doc.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    for (long n = s.valuation(); n < s.order(); ++n)
      os << n << " " << rat_to_string(s.coeff(n)) << "\n";
    emit(os.str(), out);
  }
  return 0;
}

/* ------------------------------------------------------------------ */
/* ranktable                                                           */

int cmd_ranktable(const std::string& kind, long m, long n_max,
                  const std::string& format, const std::string& out) {
  RankKind k;
  if (kind == "dyson")
    k = RankKind::Dyson;
  else if (kind == "m2")
    k = RankKind::M2;
  else {
    std::cerr << "rank kind must be 'dyson' or 'm2', got: " << kind << "\n";
    return 2;
  }
  /* DP for the Dyson kind (it reaches far higher n), enumeration for M2. */
  RankTable t = k == RankKind::Dyson ? rank_table_dp(m, n_max)
                                     : rank_table_enum(k, m, n_max);

  if (format == "json") {
    json counts = json::array();
    for (long s = 0; s < m; ++s) {
      json row = json::array();
      for (long n = 0; n <= n_max; ++n) row.push_back(t.at(s, n).get_str());
      counts.push_back(row);
    }
    json doc{{"schema_version", kSchemaVersion},
             {"generated_at", iso_timestamp()},
             {"command",
              {{"name", "ranktable"},
               {"kind", kind},
               {"modulus", m},
               {"n_max", n_max}}},
             {"counts", counts}};
    emit(doc.dump(2) + "\n", out);
  } else {
    /* CSV: header row lists the residues s, first column is n. */
    std::ostringstream os;
    os << "n";
    for (long s = 0; s < m; ++s) os << "," << s;
    os << "\n";
    for (long n = 0; n <= n_max; ++n) {
      os << n;
      for (long s = 0; s < m; ++s) os << "," << t.at(s, n).get_str();
      os << "\n";
    }
    emit(os.str(), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact q-series toolkit: rank inequality verification, series dumps, "
      "rank-count tables"};
  app.require_subcommand(1);

  /* verify */
  auto* verify = app.add_subcommand(
      "verify", "run verification pipelines for the given target ids");
  std::vector<std::string> ids;
  long order = 0;
  long finite_bound = 1000000;
  long n_max = 0;
  std::string format = "text";
  std::string out;
  verify->add_option("ids", ids, "target ids (1.4-1.7, 1.8-1.10, T2.2a/b, T2.3)")
      ->required();
  verify->add_option("--order", order, "series window (0 = per-target default)");
  verify->add_option("--finite-bound", finite_bound,
                     "upper end of the integer threshold sweep");
  verify->add_option("--n-max", n_max,
                     "oracle window (probes and conjecture cross-checks; "
                     "0 = default)");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write the report to a file");

  /* series */
  auto* series = app.add_subcommand(
      "series", "print exact coefficients of a named series");
  std::string expr_id;
  long s_order = 32;
  std::string s_format = "text";
  std::string s_out;
  series->add_option("id", expr_id,
                     "gen1..gen4, J_b, J_a_b, L_a_b, S1@1.4..T4@1.7, "
                     "T2.2a[.k], T2.2b[.k], T2.3[.k]")
      ->required();
  series->add_option("--order", s_order, "window upper end (exclusive)");
  series->add_option("--format", s_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  series->add_option("--out", s_out, "write the dump to a file");

  /* ranktable */
  auto* ranktable = app.add_subcommand(
      "ranktable", "dump rank counts mod m for 0 <= n <= n_max");
  std::string kind;
  long m = 0;
  long tbl_n_max = 0;
  std::string t_format = "csv";
  std::string t_out;
  ranktable->add_option("kind", kind, "dyson or m2")->required();
  ranktable->add_option("m", m, "rank modulus")->required();
  ranktable->add_option("n_max", tbl_n_max, "largest n")->required();
  ranktable->add_option("--format", t_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  ranktable->add_option("--out", t_out, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // every malformed invocation is a usage error
  }

  try {
    if (*verify)
      return cmd_verify(ids, order, finite_bound, n_max, format, out);
    if (*series) return cmd_series(expr_id, s_order, s_format, s_out);
    if (*ranktable)
      return cmd_ranktable(kind, m, tbl_n_max, t_format, t_out);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const WindowError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
