#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  Outcome o;
  o.code = trigrat::cli::run(args, out, err, in);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_CASE("classify") {
  const Outcome o = run({"classify", "1/6", "--function", "tan2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("exact 1/3") != std::string::npos);
  CHECK(o.out.find("1/6") != std::string::npos);

  const Outcome reduced = run({"classify", "7/6"});
  CHECK(reduced.out == "tan2(7/6) reduced 1/6: exact 1/3\n");

  const Outcome neg = run({"classify", "-1/4", "--function", "tan"});
  CHECK(neg.code == 0);
  CHECK(neg.out.find("exact -1") != std::string::npos);

  const Outcome js = run({"classify", "2/3", "--function", "cos", "--json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["verdict"]["kind"] == "exact");
  CHECK(doc["verdict"]["value"] == "-1/2");
  CHECK(doc["reduced"] == "2/3");

  CHECK(run({"classify", "1/5", "--function", "cos2"}).out.find("irrational") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"classify", "1/0"}).code == 2);
  CHECK(run({"classify", "abc"}).code == 2);
  CHECK(run({"classify", "1/3", "--function", "sin"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"poly", "8"}).code == 2);
  CHECK(run({"poly", "1"}).code == 2);
  CHECK(run({"scan"}).code == 2);
  CHECK(run({"certify", "1/5", "--bits", "4"}).code == 2);
  CHECK(run({"verify", "/nonexistent/cert.json"}).code == 2);
}

TEST_CASE("poly") {
  const Outcome o = run({"poly", "7"});
  CHECK(o.code == 0);
  CHECK(o.out == "[-7, 35, -21, 1]\n");
  CHECK(run({"poly", "3"}).out == "[-3, 1]\n");
}

TEST_CASE("certify piped into verify") {
  for (const char* fn : {"tan2", "tan", "cos2", "cos"}) {
    for (const char* angle : {"1/5", "1/8", "1/15", "1/6", "5/12", "-7/9", "1/2"}) {
      const Outcome c = run({"certify", angle, "--function", fn, "--verify"});
      REQUIRE(c.code == 0);
      const Outcome v = run({"verify"}, c.out);
      INFO(fn, " ", angle, " ", v.out);
      REQUIRE(v.code == 0);
      REQUIRE(v.out == "pass\n");
    }
  }
}

TEST_CASE("verify reads files and rejects tampering") {
  const Outcome c = run({"certify", "1/5"});
  auto doc = nlohmann::json::parse(c.out);

  const std::string path = "test_cli_cert.json";
  {
    std::ofstream f(path);
    f << c.out;
  }
  CHECK(run({"verify", path}).code == 0);

  doc["steps"][1]["exclusions"][0]["Q_value"] = "0";
  const Outcome bad = run({"verify", "-"}, doc.dump());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("exact evaluation mismatch") != std::string::npos);

  doc = nlohmann::json::parse(c.out);
  doc["steps"][0]["comment"] = "hi";
  CHECK(run({"verify"}, doc.dump()).code == 1);

  auto exact = nlohmann::json::parse(run({"certify", "1/6"}).out);
  exact["verdict"] = {{"kind", "irrational"}};
  const Outcome contradiction = run({"verify"}, exact.dump());
  CHECK(contradiction.code == 1);
  CHECK(contradiction.out.find("verdict not entailed") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("scan") {
  const Outcome o = run({"scan", "--max-den", "50", "--crosscheck"});
  CHECK(o.code == 0);
  CHECK(o.out.find("failures=0") != std::string::npos);
  CHECK(o.out.find("tan2: exact=8 pole=1") != std::string::npos);

  const Outcome one = run({"scan", "--max-den", "60", "--jobs", "1", "--crosscheck"});
  const Outcome eight = run({"scan", "--max-den", "60", "--jobs", "8", "--crosscheck"});
  CHECK(one.code == 0);
  CHECK(one.out == eight.out);

  const Outcome single = run({"scan", "--max-den", "12", "--function", "cos"});
  CHECK(single.out.find("tan2:") == std::string::npos);
  CHECK(single.out.find("cos: exact=5") != std::string::npos);
}
