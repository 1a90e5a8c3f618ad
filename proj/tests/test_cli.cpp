#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "msf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = msf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json first_json(const std::string& text) { return nlohmann::json::parse(text.substr(0, text.find('\n'))); }

}  // namespace

TEST_CASE("count reports f_max(Z7) as a decimal string") {
  const Result r = call({"count", "--group", "Z7", "--what", "fmax"});
  REQUIRE(r.code == 0);
  const auto j = first_json(r.out);
  CHECK(j["value"] == "9");
  CHECK(j["schema"] == "msf/1");
  CHECK(j["seed"] == 1);
  CHECK(j["method"] == "exhaustive");
}

TEST_CASE("mis and classify print plain text by default") {
  CHECK(call({"mis", "--fixture", "C6"}).out == "5\n");
  CHECK(call({"classify", "--group", "Z10"}).out == "TypeI(2)\n");
  CHECK(call({"classify", "--group", "Z9"}).out == "TypeII\n");
}

TEST_CASE("csv counts have a header and one row per quantity") {
  const Result r = call({"count", "-g", "Z7", "--what", "f", "fstar_max", "--format", "csv"});
  CHECK(r.out == "group,quantity,value,method\nZ7,f,16,exhaustive\nZ7,fstar_max,14,exhaustive\n");
}

TEST_CASE("json output is identical across runs and thread counts") {
  const Result a = call({"count", "-g", "Z2^4", "--what", "f", "fmax", "--threads", "1"});
  const Result b = call({"count", "-g", "Z2^4", "--what", "f", "fmax", "--threads", "4"});
  const Result c = call({"count", "-g", "Z2^4", "--what", "f", "fmax", "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
  const Result v1 = call({"verify", "--check", "extension-lemma", "-g", "Z2*Z2*Z5", "--seed", "7", "--trials", "50"});
  const Result v2 = call({"verify", "--check", "extension-lemma", "-g", "Z2*Z2*Z5", "--seed", "7", "--trials", "50"});
  CHECK(v1.code == 0);
  CHECK(v1.out == v2.out);
  CHECK(first_json(v1.out)["seed"] == 7);
}

TEST_CASE("exit codes") {
  CHECK(call({"count", "-g", "Z7x"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"--max-nodes", "0", "count", "-g", "Z7"}).code == 2);
  const Result budget = call({"enumerate", "-g", "Z2^5", "--max-nodes", "300"});
  CHECK(budget.code == 3);
  CHECK(budget.err.find("budget exceeded") != std::string::npos);
  CHECK(budget.out.empty());
  CHECK(call({"verify", "--check", "prop34", "--m", "9", "--n", "9"}).code == 1);
  CHECK(call({"verify", "--check", "prop34", "--m", "3084", "--n", "3084"}).code == 0);
}

TEST_CASE("flags override environment budgets") {
  setenv("MSF_MAX_NODES", "5", 1);
  CHECK(call({"count", "-g", "Z2^4"}).code == 3);
  CHECK(call({"count", "-g", "Z2^4", "--max-nodes", "100000"}).code == 0);
  setenv("MSF_MAX_NODES", "lots", 1);
  CHECK(call({"count", "-g", "Z3"}).code == 2);
  unsetenv("MSF_MAX_NODES");
}

TEST_CASE("enumerate streams one set per line") {
  CHECK(call({"enumerate", "-g", "Z5"}).out == "1,4\n2,3\n");
  const auto j = first_json(call({"enumerate", "-g", "Z7", "--distinct", "--format", "json"}).out);
  CHECK(j["count"] == "14");
}

TEST_CASE("linkgraph emits DOT and adjacency text that round-trips through mis") {
  const Result dot = call({"linkgraph", "-g", "Z9", "--B", "4..6", "--S", "1,7", "--dot"});
  CHECK(dot.out.rfind("graph", 0) == 0);
  const auto j = first_json(call({"linkgraph", "-g", "Z9", "--B", "4..6", "--S", "1,7"}).out);
  CHECK(j["graph"]["census"]["triangle+2-loops"] == 1);
  CHECK(call({"mis", "-g", "Z9", "--B", "4..6", "--S", "1,7"}).out == "1\n");
}

TEST_CASE("construct, caps and verify report agreement") {
  const auto c = first_json(call({"construct", "--family", "type3-5.3", "--m", "13"}).out);
  CHECK(c["family"] == "type3-5.3");
  CHECK(c["mis_exact"] == "2");
  CHECK(c["match"] == true);
  const auto caps = first_json(call({"caps", "--k", "2"}).out);
  CHECK(caps["geometric"] == caps["sumfree"]);
  CHECK(caps["agree"] == true);
  const Result v = call({"verify", "--check", "overcount-z2", "overcount-z3", "--format", "csv"});
  CHECK(v.code == 0);
  CHECK(v.out == "check,group,pass,universe\novercount-z2,Z2^4,true,5460\novercount-z3,Z3^2,true,120\n");
}
