#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

/* Run the binary under test (path from QRANK_BIN) with the given arguments,
 * capturing stdout. stderr is folded in when merge_stderr is set, silenced
 * otherwise so expected failures don't pollute the test log. */
RunResult run(const std::string& args, bool merge_stderr = false) {
  const char* bin = std::getenv("QRANK_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QRANK_BIN must point at the built binary");
  std::string cmd = std::string("'") + bin + "' " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> ls;
  std::istringstream is(s);
  std::string l;
  while (std::getline(is, l)) ls.push_back(l);
  return ls;
}

/* Remove the fields that legitimately differ between two identical runs:
 * the timestamp and the measured step times. */
void scrub_volatile(json& doc) {
  doc.erase("generated_at");
  if (doc.contains("results"))
    for (auto& r : doc["results"])
      for (auto& s : r["steps"]) s.erase("seconds");
}

}  // namespace

TEST_CASE("exit codes: pass, verified failure, usage, resource") {
  CHECK(run("verify 1.6 --order 60").code == 0);
  CHECK(run("verify 1.4 --order 60").code == 1);
  CHECK(run("verify 9.9").code == 2);
  CHECK(run("ranktable m2 10 200").code == 3);
  CHECK(run("ranktable dyson 10 9999").code == 3);
  CHECK(run("verify").code == 2);         // missing required id
  CHECK(run("frobnicate").code == 2);     // unknown subcommand
  CHECK(run("series nope").code == 2);
  CHECK(run("ranktable weird 5 10").code == 2);
  CHECK(run("verify 1.4 --format yaml").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("probe targets exit clean and say so in JSON") {
  RunResult r = run("verify 1.8 --n-max 60 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["schema_version"] == "1.0");
  CHECK(doc["command"]["name"] == "verify");
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["id"] == "1.8");
  CHECK(doc["results"][0]["status"] == "numeric-evidence");
  CHECK(doc["overall_status"] == "pass");
}

TEST_CASE("verification JSON document round-trips and carries the steps") {
  RunResult r = run("verify 1.6 --order 60 --format json");
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  std::string dumped = doc.dump(2);
  CHECK(json::parse(dumped) == doc);

  REQUIRE(doc["results"].size() == 1);
  const json& res = doc["results"][0];
  CHECK(res["status"] == "pass");
  CHECK(res["order"] == 60);
  REQUIRE(res["steps"].size() == 8);
  CHECK(res["steps"][0]["name"] == "split");
  CHECK(res["steps"][7]["name"] == "oracle-check");
  for (const auto& s : res["steps"]) {
    CHECK(s["status"] == "pass");
    CHECK(s["seconds"].is_number());
  }
}

TEST_CASE("failed target: report names the witness, exit code 1") {
  RunResult r = run("verify 1.4 --order 60 --format json");
  CHECK(r.code == 1);
  json doc = json::parse(r.out);
  const json& res = doc["results"][0];
  CHECK(res["status"] == "fail");
  bool saw_fail = false;
  for (const auto& s : res["steps"])
    if (s["name"] == "finite-range") {
      saw_fail = true;
      CHECK(s["status"] == "fail");
      CHECK(std::string(s["detail"]).find("n=1") != std::string::npos);
    } else {
      CHECK(s["status"] == "pass");
    }
  CHECK(saw_fail);
  REQUIRE(!doc["results"][0]["findings"].empty());

  // the text rendering carries the same verdict
  RunResult t = run("verify 1.4 --order 60");
  CHECK(t.code == 1);
  CHECK(t.out.find("target 1.4: FAIL") != std::string::npos);
  CHECK(t.out.find("overall: FAIL") != std::string::npos);
}

TEST_CASE("multiple ids combine into one document") {
  RunResult r = run("verify 1.6 T2.3 --order 60 --format json");
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  REQUIRE(doc["results"].size() == 2);
  CHECK(doc["results"][0]["id"] == "1.6");
  CHECK(doc["results"][1]["id"] == "T2.3");
  CHECK(doc["overall_status"] == "pass");
}

TEST_CASE("runs are deterministic (timestamps and timings aside)") {
  RunResult a = run("verify 1.6 1.8 --order 60 --format json");
  RunResult b = run("verify 1.6 1.8 --order 60 --format json");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  json da = json::parse(a.out), db = json::parse(b.out);
  scrub_volatile(da);
  scrub_volatile(db);
  CHECK(da == db);

  RunResult s1 = run("series gen1 --order 24");
  RunResult s2 = run("series gen1 --order 24");
  CHECK(s1.out == s2.out);

  RunResult t1 = run("ranktable dyson 5 24");
  RunResult t2 = run("ranktable dyson 5 24");
  CHECK(t1.out == t2.out);
}

TEST_CASE("series dumps: one exponent-value pair per line") {
  RunResult r = run("series T1@1.4 --order 10");
  REQUIRE(r.code == 0);
  std::vector<std::string> ls = lines_of(r.out);
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "0 0");
  CHECK(ls[2] == "2 1");
  CHECK(ls[3] == "3 0");
  CHECK(ls[8] == "8 1");

  RunResult l = run("series L_3_10 --order 20");
  REQUIRE(l.code == 0);
  std::vector<std::string> ll = lines_of(l.out);
  REQUIRE(ll.size() == 20);
  CHECK(ll[0] == "0 1");
  for (const std::string& line : ll) {
    auto sp = line.find(' ');
    REQUIRE(sp != std::string::npos);
    CHECK(std::stol(line.substr(sp + 1)) >= 0);
  }

  RunResult g = run("series gen1 --order 5");
  CHECK(lines_of(g.out) ==
        std::vector<std::string>{"0 1", "1 1", "2 3", "3 4", "4 7"});

  // JSON form carries the window and stringified exact values
  RunResult j = run("series J_2_10 --order 12 --format json");
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["valuation"] == 0);
  CHECK(doc["order"] == 12);
  CHECK(doc["coefficients"][0]["exponent"] == 0);
  CHECK(doc["coefficients"][0]["value"] == "1");
  CHECK(doc["coefficients"][2]["value"] == "-1");  // the q^2 factor
}

TEST_CASE("series dumps: block ids and component ids resolve") {
  CHECK(run("series T2.2a --order 20").code == 0);
  CHECK(run("series T2.2a.0 --order 20").code == 0);
  CHECK(run("series T2.3.4 --order 20").code == 0);
  CHECK(run("series T2.3.5 --order 20").code == 2);
  CHECK(run("series S1@1.6 --order 20").code == 0);
  CHECK(run("series T9@1.4 --order 20").code == 2);
  CHECK(run("series S1@2.4 --order 20").code == 2);
}

TEST_CASE("rank tables in CSV: header, residue columns, exact rows") {
  RunResult r = run("ranktable dyson 5 24");
  REQUIRE(r.code == 0);
  std::vector<std::string> ls = lines_of(r.out);
  REQUIRE(ls.size() == 26);  // header + n = 0..24
  CHECK(ls[0] == "n,0,1,2,3,4");
  CHECK(ls[5] == "4,1,1,1,1,1");  // the five partitions of 4, one per class
  CHECK(ls[1] == "0,1,0,0,0,0");  // the empty partition counts at residue 0

  RunResult m = run("ranktable m2 10 4");
  REQUIRE(m.code == 0);
  std::vector<std::string> ml = lines_of(m.out);
  CHECK(ml[0] == "n,0,1,2,3,4,5,6,7,8,9");
  CHECK(ml[5] == "4,1,1,0,0,0,0,0,0,0,1");

  RunResult z = run("ranktable dyson 10 0");
  std::vector<std::string> zl = lines_of(z.out);
  REQUIRE(zl.size() == 2);
  CHECK(zl[1] == "0,1,0,0,0,0,0,0,0,0,0");

  RunResult j = run("ranktable dyson 5 6 --format json");
  REQUIRE(j.code == 0);
  json doc = json::parse(j.out);
  CHECK(doc["command"]["modulus"] == 5);
  REQUIRE(doc["counts"].size() == 5);
  REQUIRE(doc["counts"][0].size() == 7);
  CHECK(doc["counts"][0][0] == "1");
}

TEST_CASE("--out writes the same bytes to a file") {
  std::string path = "/tmp/qrank_cli_test_out.json";
  std::remove(path.c_str());
  RunResult r = run("series gen1 --order 8 --format json --out " + path);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string content;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) content.append(buf, n);
  std::fclose(f);
  std::remove(path.c_str());
  json doc = json::parse(content);
  CHECK(doc["command"]["id"] == "gen1");
}
