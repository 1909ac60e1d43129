#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "foxabf/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = foxabf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("colorgroup") {
  const Run r = run({"colorgroup", "1 -2 1 -2 1 -2"});
  CHECK(r.code == 0);
  CHECK(r.out == "group: Z_4 + Z_4\ndeterminant: 16\n");

  const json doc = run_json({"colorgroup", "", "--strands", "1"});
  CHECK(doc["command"] == "colorgroup");
  CHECK(doc["results"]["group"]["torsion"].empty());
  CHECK(doc["results"]["determinant"] == "1");

  const Run bad = run({"colorgroup", "1 0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("token 2") != std::string::npos);

  const json from_json = run_json({"colorgroup", R"({"letters": [1, -2, 1, -2]})"});
  CHECK(from_json["results"]["group"]["display"] == "Z_5");
  CHECK(run({"colorgroup", R"({"letters": [1, "x"]})"}).code == 2);
  CHECK(run({"colorgroup", "{not json"}).code == 2);
  CHECK(run({"colorgroup", R"({"strands": 3, "letters": [1]})", "--strands", "4"}).code == 2);
}

TEST_CASE("abf") {
  CHECK(run_json({"abf", "1 -2 1 -2"})["results"]["alexander"] == "1-3*t+t^2");
  CHECK(run_json({"abf", "1 -1"})["results"]["alexander"] == "0");
  CHECK(run_json({"abf", "1", "--strands", "2"})["results"]["alexander"] == "1");
  const json doc = run_json({"abf", "1 1 1"});
  CHECK(doc["results"]["matrix"].size() == 1);
  CHECK(doc["results"]["alexander"] == "1-t+t^2");
}

TEST_CASE("wheel") {
  const json five = run_json({"wheel", "5"});
  CHECK(five["consistency"] == true);
  CHECK(five["results"]["closed_form_group"]["torsion"] == json::array({"11", "11"}));
  CHECK(five["results"]["ideal_gens"][0] == "1-3*t+3*t^2-3*t^3+t^4");

  const json two = run_json({"wheel", "2", "--moduli", "5"});
  CHECK(two["results"]["brute_force_checks"][0]["count"] == "25");
  CHECK(two["results"]["brute_force_checks"][0]["predicted"] == "25");

  CHECK(run({"wheel", "0"}).code == 2);
  CHECK(run({"wheel", "3", "--moduli", "1"}).code == 2);
  CHECK(run({"wheel", "3"}).out.find("consistent:           yes") != std::string::npos);
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--max-n", "8", "--max-index", "15"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--max-n", "1"}).code == 0);

  const Run broken = run({"verify", "--max-n", "3", "--max-index", "5", "--inject-fault"});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("n=3") != std::string::npos);

  const json doc = run_json({"verify", "--max-n", "4", "--max-index", "5"});
  CHECK(doc["consistency"] == true);
  CHECK(doc["results"]["suites"].size() >= 12);
  CHECK(run({"verify", "--max-n", "0"}).code == 2);
}

TEST_CASE("table") {
  const Run csv = run({"table", "--from", "2", "--to", "7", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::vector<std::string> groups;
  std::getline(lines, line);
  CHECK(line == "n,group,g,h,alexander");
  while (std::getline(lines, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    groups.push_back(line.substr(first + 1, second - first - 1));
  }
  CHECK(groups == std::vector<std::string>{"Z_5", "Z_4 + Z_4", "Z_15 + Z_3", "Z_11 + Z_11", "Z_40 + Z_8", "Z_29 + Z_29"});

  CHECK(run({"table", "--from", "1", "--to", "1"}).out == "n=1  0  g=1  h=1  alexander=1\n");
  const Run md = run({"table", "--from", "3", "--to", "3", "--format", "markdown"});
  CHECK(md.out.find("| 3 | Z_4 + Z_4 |") != std::string::npos);
  CHECK(run({"table", "--from", "5", "--to", "2"}).code == 2);
  CHECK(run({"table", "--from", "0", "--to", "2"}).code == 2);
  CHECK(run({"table", "--format", "xml"}).code == 2);
}

TEST_CASE("JSON output round-trips byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"colorgroup", "1 -2 1 -2 1 -2", "--format", "json"},
      {"abf", "1 -2 1 -2", "--format", "json"},
      {"wheel", "6", "--moduli", "2,5,8", "--format", "json"},
      {"verify", "--max-n", "3", "--max-index", "4", "--format", "json"},
      {"table", "--from", "2", "--to", "9", "--format", "json"},
  };
  for (const auto& args : commands) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK(run(args).out == r.out);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"colorgroup"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("enumeration cap from the environment") {
  setenv("FOXABF_BRUTE_FORCE_CAP", "10", 1);
  CHECK(run({"wheel", "2", "--moduli", "3"}).code == 2);
  setenv("FOXABF_BRUTE_FORCE_CAP", "banana", 1);
  CHECK(run({"wheel", "2"}).code == 2);
  setenv("FOXABF_BRUTE_FORCE_CAP", "1000", 1);
  CHECK(run({"wheel", "2", "--moduli", "3"}).code == 0);
  unsetenv("FOXABF_BRUTE_FORCE_CAP");
}

}  // TEST_SUITE
