#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"
#include "doctest.h"
#include "quadzeta/quad_field.hpp"

using namespace quadzeta;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  const std::string prefix = key + ": ";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return {};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("secant headline") {
  const Outcome o = run_cli({"secant", "--alpha", "sqrt(2)", "--k", "1", "--method", "both"});
  CHECK(o.code == 0);
  CHECK(field(o.out, "pretty") == "-1/3");
  CHECK(field(o.out, "agree") == "true");
  CHECK(parse_quad(field(o.out, "value")) == QuadElem::rational(Rational(-1, 3), Integer(2)));
  CHECK(std::stod(field(o.out, "residual")) < 5e-2);
  CHECK(field(o.out, "decimal") == "-0.333333333333333333333333333333");
}

TEST_CASE("printed values re-parse exactly") {
  for (const char* a : {"(1+sqrt(5))/2", "1+sqrt(3)", "2*sqrt(2)"}) {
    for (const char* method : {"arakawa", "lrr"}) {
      CAPTURE(a);
      const Outcome o =
          run_cli({"secant", "--alpha", a, "--k", "2", "--method", method, "--terms", "2000"});
      REQUIRE(o.code == 0);
      const QuadElem v = parse_quad(field(o.out, "value"));
      CHECK(to_string(v) == field(o.out, "value"));
      CHECK(parse_quad(field(o.out, "pretty"), v.radicand()) == v);
      CHECK(parse_quad(field(o.out, "alpha")) == parse_quad(a));
    }
  }
}

TEST_CASE("secant json schema") {
  const Outcome o =
      run_cli({"secant", "--alpha", "(1+sqrt(5))/2", "--k", "2", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  for (const char* key : {"alpha", "k", "value", "decimal", "methods", "residual"})
    CHECK(j.contains(key));
  for (const char* part : {"x", "y", "D"}) {
    CHECK(j["alpha"][part].is_string());
    CHECK(j["value"][part].is_string());
  }
  CHECK(j["value"]["x"] == "-11/27360");
  CHECK(j["value"]["y"] == "23/1824");
  CHECK(j["value"]["D"] == "5");
  CHECK(j["k"] == 2);
  CHECK(j["methods"].size() == 2);
  CHECK(j["agree"] == true);
  CHECK(j["residual"].get<double>() < 1e-10);
}

TEST_CASE("secant decimal and csv formats") {
  Outcome o = run_cli({"secant", "--alpha", "sqrt(3)", "--k", "1", "--format", "decimal",
                       "--terms", "1000"});
  CHECK(o.code == 0);
  CHECK(field(o.out, "value").empty());
  CHECK(field(o.out, "decimal") == "-0.0833333333333333333333333333333");
  o = run_cli({"secant", "--alpha", "sqrt(3)", "--k", "1", "--format", "csv", "--terms", "1000"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "d,k,value_x,value_y,D,decimal,methods_agree,residual");
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"secant", "--alpha", "sqrt(4)", "--k", "1"}).code == 2);
  CHECK(run_cli({"secant", "--alpha", "sqrt(2", "--k", "1"}).code == 2);
  CHECK(run_cli({"secant", "--alpha", "sqrt(2)", "--k", "0"}).code == 2);
  CHECK(run_cli({"secant", "--alpha", "sqrt(2)", "--method", "fast"}).code == 2);
  CHECK(run_cli({"secant"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"cotangent", "--alpha", "sqrt(2)"}).code == 2);
  CHECK(run_cli({"secant", "--alpha", "2*sqrt(2)", "--c-cap", "10"}).code == 4);
  CHECK(run_cli({"secant", "--alpha", "2*sqrt(2)", "--method", "lrr", "--c-cap", "10",
                 "--terms", "1000"})
            .code == 0);
  CHECK(run_cli({"secant", "--alpha", "sqrt(2)", "--prec", "16", "--terms", "1000"}).code == 5);
  CHECK(run_cli({"verify", "--alpha", "sqrt(2)", "--k", "2", "--terms", "100", "--tol", "1e-12"})
            .code == 3);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("c cap from the environment") {
  ::setenv("QUADZETA_C_CAP", "10", 1);
  CHECK(run_cli({"secant", "--alpha", "2*sqrt(2)", "--terms", "100"}).code == 4);
  CHECK(run_cli({"secant", "--alpha", "2*sqrt(2)", "--terms", "100", "--c-cap", "1000000"}).code ==
        0);
  ::setenv("QUADZETA_C_CAP", "lots", 1);
  CHECK(run_cli({"secant", "--alpha", "2*sqrt(2)", "--terms", "100"}).code == 2);
  ::unsetenv("QUADZETA_C_CAP");
}

TEST_CASE("cotangent") {
  const Outcome o = run_cli({"cotangent", "--alpha", "(1+sqrt(5))/2", "--k", "1"});
  CHECK(o.code == 0);
  CHECK(field(o.out, "magnitude") == "1/1800");
  CHECK(field(o.out, "sign") == "-");
  CHECK(field(o.out, "adjudicated") == "true");
  CHECK_FALSE(field(o.out, "note").empty());
  const Outcome j = run_cli({"cotangent", "--alpha", "3+2*sqrt(2)", "--format", "json",
                             "--terms", "20000"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["magnitude"] == "29/5760");
  CHECK(doc["adjudicated"] == true);
}

TEST_CASE("verify") {
  const Outcome o =
      run_cli({"verify", "--alpha", "sqrt(3)", "--k", "2", "--terms", "100000", "--prec", "128"});
  CHECK(o.code == 0);
  CHECK(std::stod(field(o.out, "residual")) < 1e-6);
  CHECK(field(o.out, "verified") == "true");
}

TEST_CASE("table") {
  const Outcome o = run_cli({"table", "--d", "2..10", "--k", "1..2", "--terms", "2000"});
  CHECK(o.code == 0);
  const auto rows = lines(o.out);
  REQUIRE(rows.size() == 15);
  CHECK(rows[0] == "d,k,value_x,value_y,D,decimal,methods_agree,residual");
  std::vector<std::pair<long, long>> keys;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> cols;
    std::istringstream in(rows[i]);
    for (std::string c; std::getline(in, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() == 8);
    CHECK(cols[3] == "0");
    CHECK(cols[6] == "true");
    keys.emplace_back(std::stol(cols[0]), std::stol(cols[1]));
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys.front() == std::pair<long, long>{2, 1});
  CHECK(keys.back() == std::pair<long, long>{10, 2});

  const Outcome threaded =
      run_cli({"table", "--d", "2..10", "--k", "1..2", "--terms", "2000", "--threads", "3"});
  CHECK(threaded.out == o.out);
  CHECK(run_cli({"table", "--d", "5..2"}).code == 2);
}
