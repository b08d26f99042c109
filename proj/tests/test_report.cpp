#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "json.hpp"
#include "monodromy/report.hpp"

using namespace monodromy;

namespace {

constexpr std::uint64_t kSeed = 20240815;

nlohmann::ordered_json scrubbed(const Report& rep) {
  auto j = report_to_json(rep);
  for (auto& rec : j["checks"]) rec["elapsed_ms"] = 0;
  return j;
}

ReportParams verify_params(const std::string& suite) {
  ReportParams p;
  p.suite = suite;
  p.seed = kSeed;
  return p;
}

ReportParams group_params(Family f, int rank) {
  ReportParams p;
  p.command = "report";
  p.family = f;
  p.rank = rank;
  p.seed = kSeed;
  return p;
}

template <class Fn>
std::string message_of(Fn fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.what();
  }
  return "";
}

const CheckRecord& record(const Report& rep, const std::string& id) {
  auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                         [&](const CheckRecord& c) { return c.check_id == id; });
  REQUIRE(it != rep.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("registry ids are unique, sorted output, nonempty suites") {
  std::set<std::string> ids;
  std::set<std::string> suites;
  for (const auto& spec : check_registry()) {
    CHECK(ids.insert(spec.id).second);
    CHECK_FALSE(spec.anchor.empty());
    suites.insert(spec.suite);
  }
  CHECK(suites == std::set<std::string>{"rootsys", "decomp", "transporter", "principal",
                                        "ledger"});

  // the ids called out as stable external names
  CHECK(ids.count("e7.orbits.a8") == 1);
  CHECK(ids.count("ledger.slack.sp2n") == 1);
  CHECK(ids.count("ledger.slack.sln") == 1);
  CHECK(ids.count("ledger.slack.spin2n1") == 1);
  CHECK(ids.count("ledger.slack.spin2n") == 1);
  CHECK(ids.count("ledger.slack.e7") == 1);

  std::size_t total = 0;
  for (const auto& s : {"rootsys", "decomp", "transporter", "principal", "ledger"}) {
    auto rep = run_verify(verify_params(s));
    CHECK(rep.checks.size() > 0);
    CHECK(std::is_sorted(rep.checks.begin(), rep.checks.end(),
                         [](const CheckRecord& a, const CheckRecord& b) {
                           return a.check_id < b.check_id;
                         }));
    for (const auto& c : rep.checks) {
      bool known = c.status == "pass" || c.status == "fail" || c.status == "skipped";
      CHECK(known);
    }
    total += rep.checks.size();
  }
  CHECK(total == check_registry().size());
}

TEST_CASE("every registered check passes at the default parameters") {
  auto rep = run_verify(verify_params("all"));
  CHECK(rep.checks.size() == check_registry().size());
  for (const auto& c : rep.checks) {
    INFO(c.check_id << ": " << c.observed);
    CHECK(c.status == "pass");
  }
  CHECK(rep.all_passed());
}

TEST_CASE("verify rejects bad primes and unknown suites") {
  ReportParams bad = verify_params("all");
  bad.prime = 4;
  CHECK_THROWS_AS(run_verify(bad), error);
  CHECK(message_of([&] { run_verify(bad); }).find("prime") != std::string::npos);

  ReportParams unknown = verify_params("nonsense");
  CHECK_THROWS_AS(run_verify(unknown), error);
  CHECK(message_of([&] { run_verify(unknown); }).find("unknown suite") != std::string::npos);
}

TEST_CASE("verify output is byte identical apart from timings") {
  auto a = scrubbed(run_verify(verify_params("ledger")));
  auto b = scrubbed(run_verify(verify_params("ledger")));
  CHECK(a.dump(2) == b.dump(2));

  auto c = scrubbed(run_verify(verify_params("decomp")));
  auto d = scrubbed(run_verify(verify_params("decomp")));
  CHECK(c.dump(2) == d.dump(2));
}

TEST_CASE("json document carries schema version, invocation and summary") {
  auto rep = run_verify(verify_params("rootsys"));
  auto j = report_to_json(rep);
  CHECK(j["schema_version"] == 1);
  CHECK(j["tool"] == "monodromy");
  CHECK(j["invocation"]["suite"] == "rootsys");
  CHECK(j["invocation"]["prime"] == 73);
  CHECK(j["invocation"]["seed"] == kSeed);
  CHECK(j["checks"].size() == rep.checks.size());
  int pass = 0, fail = 0, skip = 0;
  for (const auto& rec : j["checks"]) {
    CHECK(rec.contains("check_id"));
    CHECK(rec.contains("paper_anchor"));
    CHECK(rec.contains("observed"));
    CHECK(rec.contains("expected"));
    CHECK(rec.contains("elapsed_ms"));
    std::string st = rec["status"];
    (st == "pass" ? pass : st == "fail" ? fail : skip)++;
  }
  CHECK(j["summary"]["total"] == rep.checks.size());
  CHECK(j["summary"]["passed"] == pass);
  CHECK(j["summary"]["failed"] == fail);
  CHECK(j["summary"]["skipped"] == skip);
}

TEST_CASE("ledger suite reports the recorded difference rows") {
  auto rep = run_verify(verify_params("ledger"));
  CHECK(record(rep, "ledger.slack.sln").observed == "[1, 2, 3, 4, 5, 6, 7, 8]");
  CHECK(record(rep, "ledger.slack.spin2n1").observed == "[4, 7, 10, 13, 16, 19, 22]");
  CHECK(record(rep, "ledger.slack.sp2n").observed == "[2, 5, 8, 11, 14, 17, 20]");
  CHECK(record(rep, "ledger.slack.spin2n").observed == "[8, 11, 14, 17, 20]");
  CHECK(record(rep, "ledger.slack.e7").observed == "7");
  CHECK(record(rep, "ledger.principal.values").observed == "[2, 9, 34]");
}

TEST_CASE("group report covers the three reference profiles") {
  auto c3 = run_group_report(group_params(Family::C, 3));
  CHECK(record(c3, "group.decomposition").observed.find("[3, 6, 12]") != std::string::npos);
  CHECK(record(c3, "group.orbits").status == "skipped");
  CHECK(record(c3, "group.ledger.weyl").observed == "5");

  auto e7 = run_group_report(group_params(Family::E, 7));
  CHECK(record(e7, "group.decomposition").observed.find("[7, 56, 70]") != std::string::npos);
  CHECK(record(e7, "group.orbits").observed.find("[56, 70]") != std::string::npos);
  CHECK(record(e7, "group.ledger.weyl").observed == "7");
  CHECK(record(e7, "group.h0.involutions").status == "skipped");

  auto a1 = run_group_report(group_params(Family::A, 1));
  CHECK(record(a1, "group.notes.rank_exclusions").observed.find("excluded") !=
        std::string::npos);
  auto a4 = run_group_report(group_params(Family::A, 4));
  CHECK(record(a4, "group.notes.rank_exclusions").observed.find("excluded") ==
        std::string::npos);
}

TEST_CASE("group report is deterministic and validates its arguments") {
  auto a = scrubbed(run_group_report(group_params(Family::B, 3)));
  auto b = scrubbed(run_group_report(group_params(Family::B, 3)));
  CHECK(a.dump(2) == b.dump(2));

  CHECK_THROWS_AS(run_group_report(group_params(Family::D, 99)), error);
  CHECK_THROWS_AS(run_group_report(group_params(Family::E, 5)), error);
  ReportParams no_family;
  no_family.command = "report";
  no_family.rank = 3;
  CHECK_THROWS_AS(run_group_report(no_family), error);
  ReportParams bad_prime = group_params(Family::A, 2);
  bad_prime.prime = 6;
  CHECK_THROWS_AS(run_group_report(bad_prime), error);
}
