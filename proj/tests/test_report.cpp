#include <json.hpp>
#include <vector>

#include "doctest.h"
#include "simpcodes/report.hpp"
#include "simpcodes/version.hpp"

using namespace simpcodes;
using json = nlohmann::json;

namespace {

AnalysisReport worked_report(bool with_generator = false) {
  AnalyzeOptions opt;
  opt.with_generator_matrix = with_generator;
  return analyze(DefiningSetSpec(5, BitVec::from_indices(5, {1, 2}),
                                 BitVec::from_indices(5, {2, 3}),
                                 BitVec::from_indices(5, {3, 4})),
                 opt);
}

}  // namespace

TEST_CASE("report serializes the worked configuration faithfully") {
  auto text = report_to_json(worked_report());
  CHECK(text.back() == '\n');
  auto j = json::parse(text);

  CHECK(j.at("schema") == kReportSchema);
  CHECK(j.at("version") == kVersion);
  CHECK(j.at("spec").at("m") == 5);
  CHECK(j.at("spec").at("L") == std::vector<int>{1, 2});
  CHECK(j.at("spec").at("comp_L") == false);
  CHECK(j.at("case") == 1);
  CHECK(j.at("defining_set_size") == 64);
  CHECK(j.at("code").at("n") == 192);
  CHECK(j.at("code").at("k") == 7);
  CHECK(j.at("code").at("d") == 64);
  CHECK(j.at("code").at("size") == 128);
  CHECK(j.at("code").at("kernel") == 256);
  CHECK(j.at("weights").at("w0") == 64);
  CHECK(j.at("weights").at("w_inf") == 96);
  CHECK(j.at("weights").at("distinct_nonzero") == 2);
  CHECK(j.at("enumerator") == "X^192 + 9X^128Y^64 + 118X^96Y^96");
  CHECK(j.at("minimality").at("ashikhmin_barg") == true);
  CHECK(j.at("minimality").at("table_rule").at("satisfied") == true);
  CHECK(j.at("minimality").at("exact") == true);
  CHECK(j.at("self_orthogonality").at("weights_mod4") == true);
  CHECK(j.at("self_orthogonality").at("gram_zero") == true);
  CHECK(j.at("methods") ==
        std::vector<std::string>{"brute", "charsum", "table"});
  CHECK(j.at("discrepancies").is_array());
  CHECK(j.at("discrepancies").empty());
  CHECK(!j.contains("generator_matrix"));

  auto msg = j.at("distribution").at("message");
  CHECK(msg.at("level") == "message");
  CHECK(msg.at("entries") ==
        json::parse("[[0,256],[64,2304],[96,30208]]"));
  auto cw = j.at("distribution").at("codeword");
  CHECK(cw.at("entries") == json::parse("[[0,1],[64,9],[96,118]]"));
}

TEST_CASE("report key order is stable for diffing") {
  auto j = json::parse(report_to_json(worked_report()),
                       nullptr, true);
  std::vector<std::string> keys;
  auto ordered = nlohmann::ordered_json::parse(report_to_json(worked_report()));
  for (auto it = ordered.begin(); it != ordered.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{
                    "schema", "version", "spec", "case", "defining_set_size",
                    "code", "weights", "distribution", "enumerator",
                    "minimality", "self_orthogonality", "methods",
                    "discrepancies"});
  (void)j;
}

TEST_CASE("identical runs give byte-identical reports") {
  CHECK(report_to_json(worked_report()) == report_to_json(worked_report()));
}

TEST_CASE("optional fields serialize as null or appear on demand") {
  // Zero code: no minimum distance, no extreme weights, no Ashikhmin-Barg.
  auto rep =
      analyze(DefiningSetSpec(3, BitVec(3, 0), BitVec(3, 0), BitVec(3, 0)));
  auto j = json::parse(report_to_json(rep));
  CHECK(j.at("code").at("d").is_null());
  CHECK(j.at("weights").at("w0").is_null());
  CHECK(j.at("minimality").at("ashikhmin_barg").is_null());
  CHECK(j.at("minimality").at("table_rule").at("applicable") == false);
  CHECK(j.at("minimality").at("table_rule").at("w0").is_null());

  auto with_rows = json::parse(report_to_json(worked_report(true)));
  REQUIRE(with_rows.contains("generator_matrix"));
  CHECK(with_rows.at("generator_matrix").size() == 15);
}

TEST_CASE("indent parameter controls the layout only") {
  auto compact = report_to_json(worked_report(), -1);
  auto pretty = report_to_json(worked_report(), 2);
  CHECK(compact != pretty);
  CHECK(json::parse(compact) == json::parse(pretty));
}
