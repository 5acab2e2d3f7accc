#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "support.hpp"
#include "zinbiel/harness.hpp"
#include "zinbiel/report.hpp"

using namespace zt;

namespace {

VerifyOptions quick() {
  VerifyOptions o;
  o.samples = 2;
  o.seed = 7;
  return o;
}

size_t lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("base section") {
  Report r = verify_paper(cat(), "base", quick());
  CHECK(r.pass());
  const std::string md = emit_markdown(r);
  const auto start = md.find("| Entry | Multiplication table");
  REQUIRE(start != std::string::npos);
  const auto end = md.find("\n\n", start);
  // header, rule and five rows
  CHECK(lines(md.substr(start, end - start + 1)) == 7);
}

TEST_CASE("json rows carry entry ids and checks") {
  const Report r = verify_paper(cat(), "base", quick());
  const auto doc = nlohmann::json::parse(emit_json(r));
  REQUIRE(doc["rows"].is_array());
  for (const auto& row : doc["rows"]) {
    CHECK(row.contains("entryId"));
    for (const auto& c : row["checks"]) {
      CHECK(c.contains("name"));
      CHECK(c.contains("pass"));
      CHECK(c.contains("witness"));
    }
  }
}

TEST_CASE("csv has one row per N1 extension") {
  const std::string csv = emit_csv(verify_paper(cat(), "n1", quick()));
  CHECK(lines(csv) == 1 + 28);
  CHECK(csv.rfind("section,entry,pass,checks,failed,witness\n", 0) == 0);
}

TEST_CASE("N1C theorem rows") {
  const Report r = verify_theorems(cat(), "N1C", quick());
  bool seen = false;
  for (const auto& row : r.rows) {
    if (row.id != "[N1C]^1_02") continue;
    seen = true;
    CHECK(row.pass());
  }
  CHECK(seen);
}

TEST_CASE("parallel and serial runs agree") {
  VerifyOptions serial = quick(), parallel = quick();
  parallel.threads = 4;
  const std::string a = emit_json(verify_paper(cat(), "n1c", serial));
  const std::string b = emit_json(verify_paper(cat(), "n1c", parallel));
  CHECK(a == b);
}

TEST_CASE("a throwing task becomes a failed row") {
  std::vector<std::function<ReportRow()>> tasks{
      [] { ReportRow r; r.id = "ok"; r.add("fine", true); return r; },
      []() -> ReportRow { throw std::runtime_error("boom"); }};
  const auto rows = run_tasks(tasks, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].pass());
  CHECK_FALSE(rows[1].pass());
}

TEST_CASE("report formats") {
  CHECK(parse_report_format("md") == ReportFormat::Markdown);
  CHECK(parse_report_format("json") == ReportFormat::Json);
  CHECK_THROWS(parse_report_format("xml"));
  CHECK_THROWS(verify_paper(cat(), "nope", quick()));
}
