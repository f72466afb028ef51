#include <doctest.h>

#include <json.hpp>

#include <set>

#include "chenlie/error.hpp"
#include "golden.hpp"

TEST_CASE("every golden case matches its recorded output") {
  const auto cases = golden::cases();
  CHECK(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    std::string actual;
    CHECK(golden::check(c, &actual));
    const auto doc = nlohmann::json::parse(actual);
    CHECK(doc.at("schema") == 1);
  }
}

TEST_CASE("every subcommand has a golden case") {
  std::set<std::string> covered;
  for (const auto& c : golden::cases())
    for (const auto& a : c.args)
      if (a.rfind("-", 0) != 0) {
        covered.insert(a == "monodromy" ? "monodromy " + c.args[1] : a);
        break;
      }
  for (const char* sub : {"hall", "expand", "shuffle", "pair", "islie", "project", "magnus", "lcs", "eval", "pk",
                          "ck", "m5check", "monodromy reduce", "monodromy act", "derive", "integrand", "pairgraded"})
    CHECK_MESSAGE(covered.count(sub) == 1, sub);
}

TEST_CASE("text output") {
  CHECK(golden::run({"pair", "[y,[x,z]]", "[z,[x,y]]"}).out == "2\n");
  CHECK(golden::run({"ck", "-k", "2"}).out == "w2 - w1\n");
  CHECK(golden::run({"m5check"}).out == "0 (identity holds)\n");
  CHECK(golden::run({"islie", "xy + yx"}).out == "false\n");
  CHECK(golden::run({"lcs", "(x,y)"}).out == "2\n");
  CHECK(golden::run({"lcs", "((x,y),x)", "-N", "2"}).out == "exceeds 2\n");
  CHECK(golden::run({"magnus", "x", "-N", "2"}).out == "1 + x + 1/2*xx + O(3)\n");
  CHECK(golden::run({"monodromy", "act", "-i", "2", "1,0,0,0"}).out == "1 -1 0 0\n");
  CHECK(golden::run({"expand", "-"}, "[x,y]\n").out == "xy - yx\n");
}

TEST_CASE("exit codes and diagnostics") {
  const auto parse_err = golden::run({"expand", "[x,y"});
  CHECK(parse_err.code == chenlie::cli::kExitError);
  CHECK(parse_err.err.find("1:5") != std::string::npos);
  CHECK(golden::run({"pair", "x", "x + q", "--alphabet", "x,y"}).code == chenlie::cli::kExitError);
  CHECK(golden::run({"project", "1 + x"}).code == chenlie::cli::kExitError);
  CHECK(golden::run({"monodromy", "reduce", "0,0,0,0,0,0"}).code == chenlie::cli::kExitError);
  CHECK(golden::run({"monodromy", "reduce", "1,2"}).code == chenlie::cli::kExitError);
  CHECK(golden::run({"derive", "--connection", "/nonexistent.json", "o1"}).code == chenlie::cli::kExitError);
  CHECK(golden::run({}).code == chenlie::cli::kExitUsage);
  CHECK(golden::run({"hall"}).code == chenlie::cli::kExitUsage);
  CHECK(golden::run({"frobnicate"}).code == chenlie::cli::kExitUsage);
  CHECK(golden::run({"ck", "-k", "1"}).code == chenlie::cli::kExitUsage);
  CHECK(golden::run({"eval", "--model", "other", "x", "x"}).code == chenlie::cli::kExitUsage);
  const auto help = golden::run({"--help"});
  CHECK(help.code == chenlie::cli::kExitOk);
  CHECK(help.out.find("monodromy") != std::string::npos);
}

TEST_CASE("configuration documents") {
  const auto c = chenlie::cli::connection_from_json(golden::slurp(golden::dir() + "/connection.json"));
  CHECK(c.forms().size() == 2);
  CHECK(c.delta().str() == "t^2 - 1");
  CHECK_THROWS_AS(chenlie::cli::connection_from_json("{\"alphabet\": [\"o1\"]}"), chenlie::Error);
  CHECK_THROWS_AS(chenlie::cli::connection_from_json("not json"), chenlie::Error);
  const auto t = chenlie::cli::table_from_json(golden::slurp(golden::dir() + "/symbolic_table.json"));
  CHECK(t.values.size() == 2);
  CHECK(t.values[1][4].str() == "v_a2_o4");
}
