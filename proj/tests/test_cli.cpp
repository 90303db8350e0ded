#include "superschur/cli.hpp"
#include "superschur/json_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace superschur;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "superschur");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string last_line(const std::string &s) {
  const auto end = s.find_last_not_of('\n');
  const auto start = s.rfind('\n', end);
  return s.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_CASE("dim") {
  auto r = run({"dim", "--m", "1", "--n", "1", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "8,8,8\n");
  r = run({"dim", "--m", "2", "--n", "1", "--d", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "41,41,41\n");
  r = run({"dim", "--m", "1", "--n", "1", "--d", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,1,1\n");
  r = run({"dim", "--m", "2", "--n", "2", "--d", "2", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["dimension_count"] == 128);
  CHECK(j["basis_size"] == 128);
  CHECK(j["commutant_dimension"] == 128);
  // Past the commutant limit only two numbers are printed.
  r = run({"dim", "--m", "2", "--n", "2", "--d", "5"});
  CHECK(r.code == 0);
  const auto big = std::to_string(oracle::supercommutative_monomials(2, 2, 5));
  CHECK(r.out == big + "," + big + "\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--mode", "classical", "--m", "1", "--n", "1", "--d", "2", "--suite", "all"});
  CHECK(r.code == 0);
  CHECK(last_line(r.out).rfind("ALL PASS", 0) == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("commutant dimension") != std::string::npos);
  CHECK(r.out.find("|P| = |Y|") != std::string::npos);

  r = run({"verify", "--mode", "quantum", "--m", "2", "--n", "1", "--d", "2", "--suite", "relations"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS Q7 ") != std::string::npos);

  r = run({"verify", "--mode", "quantum", "--m", "1", "--n", "1", "--d", "3", "--suite", "omega"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sigma_d diagonal [1,-1,-1,1,-1,1,1,-1]") != std::string::npos);

  r = run({"verify", "--mode", "quantum", "--m", "1", "--n", "1", "--d", "2", "--suite", "basis", "--format", "json",
           "--q0", "3/2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["name"] == "basis Y_q");

  r = run({"verify", "--mode", "quantum", "--m", "1", "--n", "1", "--d", "2", "--suite", "commutation",
           "--max-power", "2"});
  CHECK(r.code == 0);
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args = {"verify", "--mode", "quantum", "--m", "2", "--n", "1", "--d", "2"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("basis, matrix and coords") {
  auto r = run({"basis", "--m", "1", "--n", "1", "--d", "1"});
  CHECK(r.code == 0);
  const Json list = Json::parse(r.out);
  REQUIRE(list.size() == 4);
  CHECK(list[0]["lambda"] == Json::array({1, 0}));
  CHECK(list[3]["A"] == Json::parse("[[1,2,1]]"));

  r = run({"coords", "--m", "1", "--n", "1", "--d", "1", "--input", R"([["f",1],["e",1]])"});
  CHECK(r.code == 0);
  CHECK(r.out == "{1_{(0,1)}: 1}\n");
  r = run({"coords", "--m", "1", "--n", "1", "--d", "1", "--input", R"([["e",1],["f",1]])", "--format", "json"});
  CHECK(r.code == 0);
  const Json c = Json::parse(r.out);
  REQUIRE(c["coordinates"].size() == 1);
  CHECK(c["coordinates"][0]["element"]["lambda"] == Json::array({1, 0}));
  CHECK(c["coordinates"][0]["coefficient"] == "1");
  r = run({"coords", "--m", "2", "--n", "1", "--d", "2", "--input", R"([["x",1,2,2],["1",[2,0,0]],["H",3]])"});
  CHECK(r.code == 0);
  CHECK(r.out == "{}\n");

  r = run({"matrix", "--mode", "quantum", "--m", "1", "--n", "1", "--d", "1", "--gen", "K1"});
  CHECK(r.code == 0);
  CHECK(r.out == "q,0\n0,1\n");
  r = run({"matrix", "--m", "1", "--n", "1", "--d", "1", "--gen", "e1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"rows\":2,\"cols\":2,\"entries\":[[0,1,\"1\"]]}\n");
}

TEST_CASE("catalogue and omega") {
  auto r = run({"catalogue", "--m", "1", "--n", "1", "--d", "1", "--format", "json"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j.contains("citation"));
    ++count;
  }
  CHECK(count > 0);

  r = run({"omega", "--m", "1", "--n", "1", "--d", "2", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["sigma_diagonal"] == Json::parse(R"(["1","-1","-1","1"])"));
  CHECK(j["Omega"]["entries"].size() == 4);
}

TEST_CASE("usage errors exit with 2") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"dim", "--m", "1", "--n", "1"},
           {"dim", "--m", "0", "--n", "1", "--d", "1"},
           {"dim", "--m", "1", "--n", "1", "--d", "-1"},
           {"dim", "--m", "2", "--n", "2", "--d", "7"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--suite", "omega"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--suite", "nonsense"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--mode", "quantum", "--q0", "1"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--mode", "quantum", "--q0", "abc"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--max-power", "0"},
           {"verify", "--m", "1", "--n", "1", "--d", "1", "--suite", "schur-weyl"},
           {"matrix", "--m", "1", "--n", "1", "--d", "1", "--gen", "K1"},
           {"matrix", "--m", "1", "--n", "1", "--d", "1", "--gen", "e7"},
           {"coords", "--m", "1", "--n", "1", "--d", "1", "--input", "[["},
           {"coords", "--m", "1", "--n", "1", "--d", "1", "--input", R"([["e",2]])"},
           {"coords", "--m", "1", "--n", "1", "--d", "1", "--input", R"([["1",[2,0]]])"},
           {"coords", "--m", "1", "--n", "1", "--d", "1", "--mode", "quantum", "--input", "[]"},
           {"omega", "--m", "1", "--n", "1", "--d", "0"},
       }) {
    const Run r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(r.out.find("PASS") == std::string::npos);
  }
  // The size guard can be lifted.
  CHECK(run({"dim", "--m", "2", "--n", "2", "--d", "7", "--allow-large"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("monomial parser") {
  const Dims dims(2, 1, 2);
  const KostantMonomial m = monomial_from_json(dims, Json::parse(R"([["e",1],["f",2],["H",3,2],["x",3,1],["1",[1,1,0]]])"));
  REQUIRE(m.factors().size() == 5);
  CHECK(m.factors()[2].kind == KostantFactor::Kind::CartanBinom);
  CHECK(m.factors()[3].root == Root(dims, 3, 1));
  CHECK(m.grading() == 0);
  CHECK(monomial_from_json(dims, Json::parse(R"([["x",1,3,2]])")).is_zero());
  CHECK_THROWS_AS(monomial_from_json(dims, Json::parse(R"({"e":1})")), std::invalid_argument);
  CHECK_THROWS_AS(monomial_from_json(dims, Json::parse(R"([["x",1,1]])")), std::invalid_argument);
  CHECK_THROWS_AS(monomial_from_json(dims, Json::parse(R"([["H","1"]])")), std::invalid_argument);
}

TEST_CASE("JSON layouts") {
  const Dims dims(2, 1, 1);
  CHECK(to_json(Root(dims, 1, 3)).dump() == R"({"i":1,"j":3,"parity":1})");
  CHECK(to_json(Weight({1, 0, 2})).dump() == "[1,0,2]");
  CheckResult c{"R1", "cite", false, "entry (1,2)", "(3 instances)"};
  CHECK(to_json(c).dump() == R"j({"name":"R1","citation":"cite","passed":false,"witness":"entry (1,2)","detail":"(3 instances)"})j");
  RepMatrix m(2, 2);
  m.set(1, 0, Rational(-3, 4));
  CHECK(matrix_json(m).dump() == R"({"rows":2,"cols":2,"entries":[[1,0,"-3/4"]]})");
  CHECK(matrix_csv(m) == "0,0\n-3/4,0\n");
}
