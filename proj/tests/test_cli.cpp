#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "mst/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = mst::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

double result(const json& j, const std::string& label) {
  for (const auto& r : j["results"])
    if (r["label"] == label) return r["value"].get<double>();
  FAIL("missing result " << label);
  return 0.0;
}

}  // namespace

TEST_CASE("eval reproduces the arcsine-weight value") {
  const auto o = call({"eval", "-f", "(t*(1-t))^(-0.5)", "-z", "0.5", "--sing", "0.5,0.5"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "eval");
  CHECK(result(j, "re") == doctest::Approx(4.44288294).epsilon(1e-9));
  CHECK(result(j, "im") == 0.0);
  for (const auto& r : j["results"]) CHECK(r.contains("err"));
}

TEST_CASE("eval accepts complex points and the principal value") {
  const auto a = call({"eval", "-f", "t", "-z", "0.3,0.4"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["inputs"]["z"] == json::array({0.3, 0.4}));
  const auto b = call({"eval", "-f", "(t*(1-t))^(-0.5)", "-z", "2", "--pv", "--sing", "0.5,0.5"});
  REQUIRE(b.code == 0);
  CHECK(std::abs(result(json::parse(b.out), "re")) < 1e-6);
}

TEST_CASE("hilbert-norm for N = 2") {
  const auto o = call({"hilbert-norm", "-N", "2"});
  REQUIRE(o.code == 0);
  CHECK(result(json::parse(o.out), "norm") == doctest::Approx(1.26759188).epsilon(1e-9));
}

TEST_CASE("solve with zero right-hand side") {
  const auto o = call({"solve", "--lambda", "0.318309886", "-g", "0", "--grid", "7"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  CHECK(result(j, "alpha") == doctest::Approx(0.25).epsilon(1e-8));
  int xs = 0;
  for (const auto& r : j["results"]) {
    if (r["label"] != "x") continue;
    ++xs;
    CHECK(r["value"].get<double>() == 0.0);
  }
  CHECK(xs == 7);
}

TEST_CASE("input errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"eval", "-f", "t"}).code == 2);
  CHECK(call({"eval", "-f", "t +", "-z", "0.5"}).code == 2);
  CHECK(call({"eval", "-f", "tan(t)", "-z", "0.5"}).code == 2);
  CHECK(call({"eval", "-f", "t", "-z", "abc"}).code == 2);
  CHECK(call({"eval", "-f", "t", "-z", "2"}).code == 2);
  CHECK(call({"eval", "-f", "t", "-z", "0.5", "--pv"}).code == 2);
  CHECK(call({"eval", "-f", "t", "-z", "0.5", "--tol", "-1"}).code == 2);
  CHECK(call({"spectrum", "-N", "4096"}).code == 2);
  CHECK(call({"solve", "--lambda", "0", "-g", "t"}).code == 2);
  CHECK(call({"invert", "sideways", "-f", "t", "-t", "0.5"}).code == 2);
  const auto o = call({"eval", "-f", "t +", "-z", "0.5"});
  CHECK(o.out.empty());
  CHECK(o.err.find("offset 3") != std::string::npos);
}

TEST_CASE("singularity exponents are validated before any quadrature") {
  // log(t - 2) is NaN everywhere; an InvalidSpec diagnostic proves it was never evaluated.
  const auto o = call({"eval", "-f", "log(t - 2)", "-z", "0.5", "--sing", "1.5,0"});
  CHECK(o.code == 2);
  CHECK(o.err.find("InvalidSpec") != std::string::npos);
  CHECK(call({"eval", "-f", "t", "-z", "0.5", "--sing", "0.5"}).code == 2);
  const auto nan = call({"eval", "-f", "log(t - 2)", "-z", "0.5"});
  CHECK(nan.code == 2);
  CHECK(nan.err.find("EvalError") != std::string::npos);
}

TEST_CASE("non-convergence exits with 3") {
  const auto o = call({"eval", "-f", "sin(1/t)/t^0.9", "-z", "0.5", "--max-level", "3", "--sing", "0.9,0"});
  CHECK(o.code == 3);
  CHECK_FALSE(json::parse(o.out)["converged"].get<bool>());
}

TEST_CASE("reports are byte-identical across runs") {
  const std::vector<std::string> args{"invert", "complex", "-f", "sin(pi*t)", "-t", "0.3,0.7"};
  const auto a = call(args);
  const auto b = call(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = call({"hilbert-norm", "-N", "64"});
  CHECK(c.out == call({"hilbert-norm", "-N", "64"}).out);
}

TEST_CASE("floats round-trip through the JSON text") {
  const auto o = call({"moments", "-f", "sin(pi*t)", "-n", "4"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  const double c1 = j["results"][1]["value"].get<double>();
  CHECK(c1 == doctest::Approx(1.0 / 3.141592653589793).epsilon(1e-12));
  CHECK(json::parse(json(c1).dump()).get<double>() == c1);
}

TEST_CASE("csv output for grid-valued results") {
  const auto o = call({"spectrum", "-N", "8", "--csv"});
  REQUIRE(o.code == 0);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,t_or_lambda,value,err");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);

  const auto inv = call({"invert", "real", "-f", "t", "-t", "0.2,0.5", "--csv"});
  REQUIRE(inv.code == 0);
  CHECK(inv.out.rfind("index,t_or_lambda,value,err\n0,0.2", 0) == 0);

  // No grid: stays JSON.
  CHECK(json::parse(call({"hilbert-norm", "-N", "2", "--csv"}).out)["command"] == "hilbert-norm");
}

TEST_CASE("spectrum keeps eigenvalues below the double range") {
  const auto o = call({"spectrum", "-N", "256"});
  REQUIRE(o.code == 0);
  const json j = json::parse(o.out);
  const auto& smallest = j["results"][0]["value"];
  REQUIRE(smallest.is_string());
  CHECK(smallest.get<std::string>().find("e-3") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "mst_cli_out_test.json";
  const auto o = call({"bergman", "-K", "10", "--out", path.string()});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(result(j, "partial_sum") == doctest::Approx(2.9289682540).epsilon(1e-10));
  std::filesystem::remove(path);
}

TEST_CASE("identities, convolution and witness commands") {
  const auto id = call({"identities", "-f", "t*(1-t)"});
  REQUIRE(id.code == 0);
  const json j = json::parse(id.out);
  CHECK(j["results"].size() == 6);
  for (const auto& r : j["results"]) CHECK(r["value"].get<double>() < 1e-6);

  const auto printed = call({"identities", "-f", "t", "--id", "derivative", "--printed"});
  REQUIRE(printed.code == 0);
  CHECK(result(json::parse(printed.out), "derivative") > 1e-2);
  CHECK_FALSE(json::parse(printed.out)["warnings"].empty());

  const auto skipped = call({"identities", "-f", "t^-0.5", "--sing", "0.5,0"});
  REQUIRE(skipped.code == 0);
  CHECK(json::parse(skipped.out)["results"].size() == 5);
  CHECK(call({"identities", "-f", "t^-0.5", "--sing", "0.5,0", "--id", "derivative"}).code == 2);

  const auto conv = call({"convolve-check", "-f", "t", "-g", "t^2"});
  REQUIRE(conv.code == 0);
  CHECK(result(json::parse(conv.out), "residual") < 1e-5);
  const auto adj = call({"convolve-check", "--adjudicate"});
  REQUIRE(adj.code == 0);
  const json a = json::parse(adj.out);
  CHECK(a["inputs"]["accepted"] == "symmetric");
  CHECK(result(a, "printed_zero_residual") > 1e-2);
  CHECK(a["notes"].size() == 1);

  const auto w = call({"witness", "--a", "0.5", "--p", "2"});
  REQUIRE(w.code == 0);
  const json wj = json::parse(w.out);
  CHECK(result(wj, "bound") == doctest::Approx(2.0 / 3.0));
  CHECK(result(wj, "computed") >= result(wj, "bound"));
}

TEST_CASE("help exits with 0") {
  const auto o = call({"--help"});
  CHECK(o.code == 0);
  CHECK(o.out.find("hilbert-norm") != std::string::npos);
  const auto sub = call({"invert", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("0.1,0.05,0.025,0.0125") != std::string::npos);
}
