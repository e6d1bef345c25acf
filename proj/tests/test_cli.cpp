#include <doctest.h>

#include <json.hpp>

#include "tricgt/cli.hpp"

using namespace tricgt;
using nlohmann::json;

namespace {

CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "tricgt");
  return dispatch(args);
}

json run_json(std::vector<std::string> args, int want_code = 0) {
  args.push_back("--json");
  const auto r = run(args);
  CHECK(r.exit_code == want_code);
  const json doc = json::parse(r.payload);
  CHECK(doc.contains("command"));
  CHECK(doc.contains("result"));
  return doc;
}

bool has(const std::string& text, std::string_view needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("documented examples") {
  auto r = run({"classify", "{1,11}"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload == "Q (∞)\n");

  r = run({"solve", "Q+Q=O"});
  CHECK(r.exit_code == 0);
  CHECK(has(r.payload, "Q+Q=O: "));

  r = run({"solve", "O+O=O"});
  CHECK(r.exit_code == 1);
  CHECK(has(r.payload, "no solution in scanned universe"));

  r = run({"reduce", "1,1,2,5"});
  CHECK(r.exit_code == 0);
  CHECK(r.payload == "22, type Q (∞)\n");
}

TEST_CASE("text output of the other commands") {
  CHECK(run({"classify", "2"}).payload == "N (1)\nwinning move to 0\n");
  CHECK(has(run({"sum", "1", "2"}).payload, "Q (∞)"));
  CHECK(has(run({"signature", "0"}).payload, "1 2 0 1 2 0 1 2 0 1 2"));
  CHECK(has(run({"table", "subtraction"}).payload, "3 | 3   2   1   none"));
  CHECK(has(run({"scan-forbidden"}).payload, "checked 136 pairs"));
  auto equiv = run({"equiv", "3", "2"});
  CHECK(equiv.exit_code == 1);
  CHECK(equiv.payload == "distinguished by {0,{1}}: Q (∞) vs O (2)\n");
  equiv = run({"equiv", "13", "12"});
  CHECK(equiv.exit_code == 0);
  CHECK(has(equiv.payload, "battery of 33"));
  CHECK(run({"equiv", "3", "4", "--battery", "1;2"}).exit_code == 0);
  CHECK(has(run({"near-inf", "--type", "O", "--day", "3"}).payload, "{2}"));
  const auto census = run({"enumerate", "--day", "3", "--census"}).payload;
  CHECK(has(census, "P (0): 2"));
  CHECK(has(census, "N (1): 8"));
}

TEST_CASE("json output for every subcommand") {
  auto doc = run_json({"classify", "{1,11}"});
  CHECK(doc["command"] == "classify");
  CHECK(doc["result"]["type"] == "Q");
  CHECK(doc["result"]["symbol"] == "∞");

  doc = run_json({"sum", "1", "2"});
  CHECK(doc["result"]["type"] == "Q");
  CHECK(doc["result"]["subgames"] == 5);

  doc = run_json({"reduce", "1,1,2,5"});
  CHECK(doc["result"]["reduced"] == "22");
  CHECK(doc["result"]["type"] == "Q");

  doc = run_json({"signature", "1"});
  CHECK(doc["result"]["signature"].size() == 11);

  doc = run_json({"table", "addition", "--day", "3"});
  CHECK(doc["result"]["matches_known"] == true);

  doc = run_json({"solve", "N+N=N"});
  CHECK(doc["result"]["found"] == true);
  doc = run_json({"solve", "O+O=O"}, 1);
  CHECK(doc["result"]["found"] == false);

  doc = run_json({"scan-forbidden", "--day", "2"});
  CHECK(doc["result"]["pairs_checked"] == 10);

  doc = run_json({"equiv", "3", "2"}, 1);
  CHECK(doc["result"]["context"] == "{0,{1}}");
  CHECK(doc["result"]["indistinguishable"] == false);

  doc = run_json({"near-inf", "--type", "P", "--day", "2"});
  CHECK(doc["result"]["candidates"].empty());

  doc = run_json({"enumerate", "--day", "2"});
  CHECK(doc["result"]["games"] == json::array({"0", "1", "2", "{1}"}));
  doc = run_json({"enumerate", "--day", "3", "--census"});
  CHECK(doc["result"]["census"]["Q"] == 3);

  doc = run_json({"verify", "--quick"});
  CHECK(doc["command"] == "verify");
}

TEST_CASE("text and json agree") {
  const auto text = run({"near-inf", "--type", "O", "--day", "3"}).payload;
  const auto doc = run_json({"near-inf", "--type", "O", "--day", "3"});
  for (const auto& g : doc["result"]["candidates"]) CHECK(has(text, "  " + g.get<std::string>() + "\n"));
  CHECK(has(text, std::to_string(doc["result"]["candidates"].size()) + " candidates"));

  const auto solved = run({"solve", "Q+Q=O"}).payload;
  const auto solved_doc = run_json({"solve", "Q+Q=O"});
  CHECK(solved == "Q+Q=O: " + solved_doc["result"]["left"].get<std::string>() + " + " +
                      solved_doc["result"]["right"].get<std::string>() + "\n");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"classify", "1", "--bogus"}).exit_code == 2);
  CHECK(run({"table", "product"}).exit_code == 2);
  CHECK(run({"table", "addition", "--day", "5"}).exit_code == 2);
  CHECK(run({"solve", "Q+Q"}).exit_code == 2);
  CHECK(run({"near-inf", "--type", "X"}).exit_code == 2);
  CHECK(run({"verify", "--quick", "--full"}).exit_code == 2);

  const auto bad = run({"classify", "{1,}"});
  CHECK(bad.exit_code == 2);
  CHECK(has(bad.payload, "at byte 3"));
  const auto doc = json::parse(run({"classify", "{}", "--json"}).payload);
  CHECK(doc["offset"] == 0);
  CHECK(doc.contains("error"));

  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(has(help.payload, "classify"));
}

TEST_CASE("verify quick passes") {
  const auto r = run({"verify", "--quick"});
  CHECK(r.exit_code == 0);
  CHECK(has(r.payload, "PASS"));
  CHECK_FALSE(has(r.payload, "FAIL"));
}
