#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "lie3zeta/serialize.hpp"

using namespace lie3z;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(LIE3ZETA_CLI) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Outcome o;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) o.out += buf.data();
  const int status = ::pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/lie3zeta_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("compute renders the product formula") {
  const auto o = run("compute --catalog heisenberg -p 3 --format latex");
  CHECK(o.code == 0);
  CHECK(o.out == "\\zeta_{3}(s)\\zeta_{3}(s-1)\\zeta_{3}(2s-2)\\zeta_{3}(2s-3)\\zeta_{3}(3s-3)^{-1}\n");
}

TEST_CASE("compute JSON follows the report schema") {
  const auto o = run("compute --catalog heisenberg -p 2 --terms 3");
  REQUIRE(o.code == 0);
  const auto report = report_from_json(Json::parse(o.out));
  CHECK(report.p == 2);
  CHECK(report.coefficients.size() == 4);
  CHECK(report.coefficients[1] == 3);
  CHECK(*report.abscissa == Rational(3, 2));
}

TEST_CASE("verify passes on sl2 at 2") {
  const auto o = run("verify --catalog sl2 -p 2 --oracle-level 5");
  CHECK(o.code == 0);
  const auto j = Json::parse(o.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 7);
}

TEST_CASE("verify on a scaled input file") {
  const auto path = temp_file("scaled.json", R"({"p": 3, "scale": 1, "lambda": [[1, 2, 3, 1], [1, 3, 1, -2], [2, 3, 2, 2]]})");
  const auto o = run("verify --input " + path + " --oracle-level 3");
  CHECK(o.code == 0);
}

TEST_CASE("antisymmetry violation exits 2") {
  const auto path = temp_file("bad.json", R"({"p": 3, "lambda": [[1, 1, 1, 1]]})");
  const auto o = run("compute --input " + path);
  CHECK(o.code == 2);
  const auto j = Json::parse(o.out);
  CHECK(j["detail"] == "antisymmetry violated at (i,j,k) = (1,1,1)");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("compute --catalog sl2 -p 4").code == 2);
  CHECK(run("compute --catalog sl2").code == 2);
  CHECK(run("compute --catalog nope -p 3").code == 2);
  CHECK(run("compute --catalog sl2 -p 3 --format pdf").code == 2);
  CHECK(run("compute --catalog sl2 -p 3 --terms 5000").code == 2);
  CHECK(run("compute --input /nonexistent.json").code == 2);
  CHECK(run("compute --input " + temp_file("junk.json", "{not json")).code == 2);
  CHECK(run("oracle --catalog abelian -p 7 --oracle-level 9").code == 2);
  CHECK(run("catalog emit L2 -p 3 --r 0").code == 2);
}

TEST_CASE("catalog emit round trips through compute") {
  const auto emitted = run("catalog emit sl1_delta -p 5");
  REQUIRE(emitted.code == 0);
  const auto path = temp_file("sl1.json", emitted.out);
  const auto a = run("compute --input " + path + " --format plain --terms 2");
  const auto b = run("compute --catalog sl1_delta -p 5 --format plain --terms 2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("zeta_5(s) zeta_5(2s-1) zeta_5(2s-2)\n", 0) == 0);
}

TEST_CASE("catalog list") {
  const auto o = run("catalog list");
  REQUIRE(o.code == 0);
  const auto j = Json::parse(o.out);
  CHECK(j.size() == 10);
  CHECK(j[0]["name"] == "abelian");
}

TEST_CASE("count, oracle, form, igusa, poles") {
  const auto count = run("count --catalog heisenberg -p 3 --level 2");
  CHECK(count.out == "{\"p\":3,\"m\":0,\"N\":\"1\",\"Nstar\":\"1\"}\n{\"p\":3,\"m\":1,\"N\":\"9\",\"Nstar\":\"8\"}\n"
                     "{\"p\":3,\"m\":2,\"N\":\"243\",\"Nstar\":\"216\"}\n");
  const auto oracle = run("oracle --catalog heisenberg -p 2 --oracle-level 1");
  CHECK(oracle.out == "{\"p\":2,\"n\":0,\"subalgebras\":\"1\",\"sublattices\":\"1\"}\n"
                      "{\"p\":2,\"n\":1,\"subalgebras\":\"3\",\"sublattices\":\"7\"}\n");
  CHECK(run("form --catalog L4 -p 3 --r 1 --format plain").out == "x2^2 - 3*x3^2\n");
  const auto igusa = Json::parse(run("igusa --catalog heisenberg -p 5").out);
  CHECK(igusa["method"] == "closed_form");
  CHECK(rational_function_from_json(igusa["zeta"]) ==
        RationalFunction::make(Polynomial{Rational(4, 5)}, Polynomial{1, 0, Rational(-1, 5)}));
  const auto poles = Json::parse(run("poles --catalog L5 --r 1 -p 3").out);
  CHECK(poles["abscissa"] == "1");
  CHECK(poles["real_pole_orders"]["1"] == 2);
}

TEST_CASE("identical invocations give identical output") {
  const auto a = run("compute --catalog sl2 -p 2 --terms 8");
  const auto b = run("compute --catalog sl2 -p 2 --terms 8");
  CHECK(a.out == b.out);
}
