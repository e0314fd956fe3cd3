#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "detinv/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = detinv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("rows").is_array());
  return doc;
}

}  // namespace

TEST_CASE("hilbert command") {
  const auto r = run({"hilbert", "--m", "2", "--n", "2", "--a", "0,1,2", "--tags", "T,S", "--dmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d=4 gamma=9 theta=9 equal=true") != std::string::npos);

  const auto doc = json_of({"hilbert", "--m", "2", "--n", "2", "--a", "0,1,2", "--tags", "T,S", "--dmax", "4"});
  std::vector<long> gamma;
  for (const auto& row : doc["rows"]) {
    gamma.push_back(row["gamma"].get<long>());
    CHECK(row["equal"] == true);
  }
  CHECK(gamma == std::vector<long>{1, 2, 4, 6, 9});

  const auto empty = json_of({"hilbert", "--a", "0,2", "--tags", "G", "--m", "2", "--n", "2", "--dmax", "2"});
  for (std::size_t d = 0; d < 3; ++d) {
    CHECK(empty["rows"][d]["gamma"] == (d == 0 ? 1 : 0));
    CHECK(empty["rows"][d]["theta"] == (d == 0 ? 1 : 0));
  }

  CHECK(run({"hilbert", "--m", "2", "--n", "2", "--a", "0,1,2", "--tags", "T,Q", "--dmax", "2"}).code == 2);
  CHECK(run({"hilbert", "--m", "2", "--n", "2", "--a", "0,1,2", "--tags", "T,S"}).code == 2);
  CHECK(run({"hilbert", "--m", "2", "--n", "2", "--a", "0,1,2", "--tags", "T,S", "--dmax", "100"}).code == 3);
}

TEST_CASE("straighten command") {
  const auto r = run({"straighten", "--m", "2", "--n", "2", "--factors", "[2|1],[1|2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "+1 [1|1][2|2] -1 [12|12]\n");
  const auto std_input = run({"straighten", "--m", "2", "--n", "2", "--factors", "[1|1],[2|2]"});
  CHECK(std_input.out == "+1 [1|1][2|2]\n");
  CHECK(run({"straighten", "--m", "2", "--n", "2", "--factors", "[3|1]"}).code == 2);
  CHECK(run({"straighten", "--m", "2", "--n", "2", "--factors", "[21|1]"}).code == 2);

  const auto doc = json_of({"straighten", "--m", "2", "--n", "2", "--factors", "[2|1],[1|2]"});
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["rows"][1]["coefficient"] == "-1");
  CHECK(doc["rows"][1]["monomial"] == "[12|12]");
}

TEST_CASE("sigma command") {
  const auto doc = json_of({"sigma", "--m", "2", "--n", "2", "--d", "2"});
  CHECK(doc["total"] == 10);
  CHECK(doc["sigma_size"] == 5);
  std::map<std::string, long> shapes;
  for (const auto& row : doc["rows"]) shapes[row["shape"]] = row["count"];
  CHECK(shapes == std::map<std::string, long>{{"(2)", 9}, {"(1,1)", 1}});

  CHECK(json_of({"sigma", "--m", "1", "--n", "1", "--d", "3"})["total"] == 1);
  CHECK(json_of({"sigma", "--m", "3", "--n", "3", "--d", "2"})["total"] == 45);
  const auto listed = json_of({"sigma", "--m", "2", "--n", "2", "--d", "2", "--list"});
  CHECK(listed["monomials"].size() == 10);
  CHECK(run({"sigma", "--m", "0", "--n", "2", "--d", "2"}).code == 2);
  CHECK(run({"sigma", "--m", "2", "--n", "2", "--d", "2", "--list", "--cap-dim", "5"}).code == 3);
}

TEST_CASE("fsing commands") {
  const auto fpure = run({"fsing", "fpure", "--p", "2", "--vars", "4", "--ideal", "x1*x4 - x2*x3"});
  CHECK(fpure.code == 0);
  CHECK(fpure.out.find("verdict=FPure") != std::string::npos);
  CHECK(fpure.out.find("witness=x1*x4 + x2*x3") != std::string::npos);

  CHECK(run({"fsing", "fpure", "--p", "2", "--vars", "1", "--ideal", "x1^2"}).code == 1);
  CHECK(run({"fsing", "fpure", "--p", "2", "--weights", "2,3", "--ideal", "x2^2 - x1^3"}).code == 1);

  const auto split = json_of({"fsing", "split", "--p", "2", "--r", "1", "--c", "x1", "--ideal", "x1*x4 - x2*x3"});
  CHECK(split["verdict"] == "Split");
  CHECK(split["rows"][0]["verified"] == true);
  CHECK(split["rows"][0]["witness"].get<std::string>().find("x1*x2*x3") != std::string::npos);

  const auto matrix = run({"fsing", "fpure", "--p", "3", "--vars", "4", "--cols", "2", "--ideal", "x_1_1*x_2_2 - x_1_2*x_2_1"});
  CHECK(matrix.code == 0);

  const auto tc = json_of({"fsing", "tc", "--p", "2", "--ideal", "x1^2, x2^2", "--x", "x1*x2"});
  CHECK(tc["rows"][0]["contained"] == false);
  CHECK(run({"fsing", "tc", "--p", "2", "--ideal", "x1^2, x2^2", "--x", "x1^2", "--r", "2"}).code == 0);
  CHECK(run({"fsing", "tc", "--p", "2", "--ideal", "x1^2, x2^2", "--x", "1", "--vars", "2", "--r", "2"}).code == 1);

  CHECK(run({"fsing", "fpure", "--p", "4", "--ideal", "x1"}).code == 2);
  CHECK(run({"fsing", "fpure", "--p", "5", "--ideal", "x1*x4 - x2*x3"}).code == 3);
  CHECK(run({"fsing", "fpure", "--p", "2", "--ideal", "x1 + x2^2"}).code == 2);
  CHECK(run({"fsing", "fpure", "--p", "2", "--ideal", "x1 +* x2"}).code == 2);
  CHECK(run({"fsing", "fpure", "--p", "2"}).code == 2);
  CHECK(run({"fsing", "split", "--p", "2", "--c", "x1", "--ideal", "x1*x4 - x2*x3", "--r", "4"}).code == 3);
  CHECK(run({"fsing", "fpure", "--p", "2", "--ideal-file", "/nonexistent/ideal.txt"}).code == 2);
  CHECK(run({"fsing"}).code == 2);
}

TEST_CASE("ideal files") {
  const std::string path = "cli_test_ideal.txt";
  {
    std::ofstream f(path);
    f << "# the 2x2 determinant\nx1*x4 - x2*x3\n";
  }
  const auto r = run({"fsing", "fpure", "--p", "3", "--ideal-file", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict=FPure") != std::string::npos);
}

TEST_CASE("cauchy and detvariety commands") {
  const auto cauchy = json_of({"cauchy", "--m", "3", "--n", "2", "--d", "3"});
  CHECK(cauchy["rows"][3]["cauchy"] == 56);
  CHECK(cauchy["pass"] == true);
  const auto det = json_of({"detvariety", "--m", "2", "--n", "2", "--t", "1", "--dmax", "3"});
  CHECK(det["rows"][2]["hilbert"] == 9);
  CHECK(run({"detvariety", "--m", "2", "--n", "2", "--t", "3", "--dmax", "3"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"sigma", "--m", "2", "--n", "2", "--d", "2", "--format", "xml"}).code == 2);
  CHECK(run({"sigma", "--m", "2", "--n", "2", "--d", "2", "--cap-dim", "0"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("hilbert") != std::string::npos);
}

TEST_CASE("csv output") {
  const auto r = run({"cauchy", "--m", "2", "--n", "2", "--d", "2", "--format", "csv"});
  CHECK(r.out == "d,cauchy,binomial,equal\n0,1,1,true\n1,4,4,true\n2,10,10,true\n");
  const auto quoted = run({"fsing", "fpure", "--p", "2", "--ideal", "x1^2", "--format", "csv"});
  CHECK(quoted.out.find("\"") == std::string::npos);
}

TEST_CASE("identical flags give identical bytes") {
  const std::vector<std::vector<std::string>> commands{
      {"hilbert", "--m", "3", "--n", "3", "--a", "0,1,3", "--tags", "T,S", "--dmax", "4", "--format", "json"},
      {"sigma", "--m", "2", "--n", "3", "--d", "3", "--list"},
      {"straighten", "--m", "3", "--n", "3", "--factors", "[23|12],[13|23],[3|1]", "--format", "csv"},
      {"fsing", "split", "--p", "3", "--c", "x1", "--ideal", "x1*x4 - x2*x3", "--format", "json"},
  };
  for (const auto& args : commands) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}
