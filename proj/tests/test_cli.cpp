#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nashtoric/cli.hpp"

using namespace nashtoric;
using cli::Command;
using cli::RunReport;
using cli::RunRequest;
using ojson = nlohmann::ordered_json;

namespace {

RunRequest request(Command command, std::string input) {
  RunRequest r;
  r.command = command;
  r.input = std::move(input);
  return r;
}

struct BatchFile {
  std::string path;
  BatchFile(const char* name, const std::string& content)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    std::ofstream file(path);
    REQUIRE(file.good());
    file << content;
  }
  ~BatchFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("resolve prints the full trace") {
  const RunReport report = cli::run(request(Command::resolve, "12,28,33"));
  CHECK(report.exit_code == 0);
  CHECK(report.err.empty());
  CHECK(report.out ==
        "input: {12, 28, 33}\n"
        "step 0: {12, 28, 33}  mult 12  embdim 3\n"
        "step 1: {12, 16, 21}  mult 12  embdim 3\n"
        "step 2: {4, 9, 12}  mult 4  embdim 2\n"
        "step 3: {4, 5, 8}  mult 4  embdim 2\n"
        "step 4: {1, 4}  mult 1  embdim 1\n"
        "eta: 4\n");
}

TEST_CASE("resolve on a smooth input reports eta zero") {
  const RunReport report = cli::run(request(Command::resolve, "1,5"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: {1, 5}\n"
        "step 0: {1, 5}  mult 1  embdim 1\n"
        "eta: 0\n");
}

TEST_CASE("resolve handles ten-digit generators") {
  const RunReport report =
      cli::run(request(Command::resolve, "10000000000,20000000001"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: {10000000000, 20000000001}\n"
        "step 0: {10000000000, 20000000001}  mult 10000000000  embdim 2\n"
        "step 1: {10000000000, 10000000001}  mult 10000000000  embdim 2\n"
        "step 2: {1, 10000000000}  mult 1  embdim 1\n"
        "eta: 2\n");
}

TEST_CASE("resolve rejects invalid input with exit 2") {
  const RunReport report = cli::run(request(Command::resolve, "4,6"));
  CHECK(report.exit_code == 2);
  CHECK(report.out.empty());
  CHECK(report.err == "error[GcdNotOne]: generators have gcd 2\n");

  CHECK(cli::run(request(Command::resolve, "0,3")).exit_code == 2);
  CHECK(cli::run(request(Command::resolve, "")).exit_code == 2);
  CHECK(cli::run(request(Command::resolve, "2,x")).exit_code == 2);
}

TEST_CASE("resolve input parsing ignores whitespace") {
  const RunReport spaced =
      cli::run(request(Command::resolve, "  12 ,\t28 , 33 "));
  const RunReport plain = cli::run(request(Command::resolve, "12,28,33"));
  CHECK(spaced.out == plain.out);
}

TEST_CASE("resolve respects the iteration cap") {
  RunRequest r = request(Command::resolve, "12,28,33");
  r.cap = 2;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 4);
  CHECK(report.err.substr(0, 21) == "error[IterationCap]: ");
}

TEST_CASE("summary prints division rows with delta and eta") {
  const RunReport report = cli::run(request(Command::summary, "20,165,172"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: {20, 165, 172}\n"
        "row 1: 165 = 20*8 + 5  ->  {5, 12, 20}\n"
        "row 2: 12 = 5*2 + 2  ->  {2, 5, 10}\n"
        "row 3: 5 = 2*2 + 1  ->  {1, 2, 6}\n"
        "delta: 3\n"
        "sum q: 12\n"
        "eta: 12 (sum q = eta)\n");
}

TEST_CASE("summary of a coprime pair has one row") {
  const RunReport report = cli::run(request(Command::summary, "2,3"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: {2, 3}\n"
        "row 1: 3 = 2*1 + 1  ->  {1, 2}\n"
        "delta: 1\n"
        "sum q: 1\n"
        "eta: 1 (sum q = eta)\n");
}

TEST_CASE("summary on a smooth input exits 3") {
  const RunReport report = cli::run(request(Command::summary, "1,7"));
  CHECK(report.exit_code == 3);
  CHECK(report.out.empty());
  CHECK(report.err.substr(0, 21) == "error[AlreadySmooth]:");
}

TEST_CASE("bounds prints the bound panel") {
  const RunReport report = cli::run(request(Command::bounds, "2,3"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: {2, 3}\n"
        "v: 3\n"
        "eta bound: 1\n"
        "eta: 1\n"
        "delta: 1\n"
        "fib lower: a1 = 2 >= F_2 = 2, a2 = 3 >= F_3 = 3 : holds\n"
        "delta fib bound: 2\n"
        "delta digit bound: 4\n");
}

TEST_CASE("bounds on the ten-digit example") {
  const RunReport report =
      cli::run(request(Command::bounds, "10000000000,20000000001"));
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("eta bound: 10000000000\n") != std::string::npos);
  CHECK(report.out.find("eta: 2\n") != std::string::npos);
  CHECK(report.out.find("delta: 1\n") != std::string::npos);
  CHECK(report.out.find("BOUND VIOLATION") == std::string::npos);
}

TEST_CASE("bounds on the three-generator example") {
  const RunReport report = cli::run(request(Command::bounds, "20,165,172"));
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("delta: 3\n") != std::string::npos);
  CHECK(report.out.find("delta digit bound: 10\n") != std::string::npos);
  CHECK(report.out.find(
            "fib lower: a1 = 20 >= F_4 = 5, a2 = 165 >= F_5 = 8 : holds") !=
        std::string::npos);
}

TEST_CASE("bounds on a smooth input exits 3") {
  CHECK(cli::run(request(Command::bounds, "1,5")).exit_code == 3);
}

TEST_CASE("charts lists pivots with retained flags") {
  RunRequest r = request(Command::charts, "(1,0),(1,1),(3,4)");
  r.depth = 0;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: dim 2, {(1, 0), (1, 1), (3, 4)}\n"
        "separator: (1, 0)\n"
        "pivot (1,2): {(1, 0), (1, 1), (2, 3), (2, 4)} retained\n"
        "pivot (1,3): {(-2, -3), (0, 1), (1, 0), (3, 4)} discarded\n"
        "pivot (2,3): {(-2, -4), (0, -1), (1, 1), (3, 4)} retained\n");
}

TEST_CASE("charts on a curve prints the full iteration tree") {
  const RunReport report = cli::run(request(Command::charts, "12,28,33"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: dim 1, {(12), (28), (33)}\n"
        "separator: (1)\n"
        "pivot (1): {(12), (16), (21)} retained\n"
        "pivot (2): {(-16), (5), (28)} discarded\n"
        "pivot (3): {(-21), (-5), (33)} discarded\n"
        "tree:\n"
        "  - {(12), (28), (33)} expanded\n"
        "    - pivot (1): {(12), (16), (21)} expanded\n"
        "      - pivot (1): {(4), (9), (12)} expanded\n"
        "        - pivot (1): {(4), (5), (8)} expanded\n"
        "          - pivot (1): {(1), (4)} smooth\n");
}

TEST_CASE("charts rejects invalid configurations with exit 2") {
  const RunReport hull = cli::run(request(Command::charts, "(1,0),(-1,0)"));
  CHECK(hull.exit_code == 2);
  CHECK(hull.err.substr(0, 20) == "error[OriginInHull]:");

  const RunReport sparse = cli::run(request(Command::charts, "(2,0),(0,2)"));
  CHECK(sparse.exit_code == 2);
  CHECK(sparse.err == "error[LatticeNotFull]: maximal minors have gcd 4\n");

  CHECK(cli::run(request(Command::charts, "(1,0),(1")).exit_code == 2);
}

TEST_CASE("ideal prints the two ideals in the fixed grammar") {
  const RunReport report =
      cli::run(request(Command::ideal, "(1,0),(1,1),(1,2)"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: dim 2, {(1, 0), (1, 1), (1, 2)}\n"
        "log jacobian: u1*u2, u1*u3, u2*u3\n"
        "binomials (degree <= 4):\n"
        "  u1*u3 - u2^2\n"
        "  u1^2*u3^2 - u2^4\n");
}

TEST_CASE("ideal honors the degree bound flag") {
  RunRequest r = request(Command::ideal, "(1,0),(1,1),(3,4)");
  r.degree = 4;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("binomials (degree <= 4):\n  u1*u3 - u2^4\n") !=
        std::string::npos);

  r.degree = 3;
  CHECK(cli::run(r).out.find("binomials (degree <= 3): none") !=
        std::string::npos);
}

TEST_CASE("ideal reports when no binomial exists") {
  const RunReport report = cli::run(request(Command::ideal, "(1,0),(0,1)"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: dim 2, {(1, 0), (0, 1)}\n"
        "log jacobian: u1*u2\n"
        "binomials (degree <= 4): none\n");
}

TEST_CASE("ideal on a curve uses singleton jacobian monomials") {
  const RunReport report = cli::run(request(Command::ideal, "2,3"));
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "input: dim 1, {(2), (3)}\n"
        "log jacobian: u1, u2\n"
        "binomials (degree <= 4):\n"
        "  u1^3 - u2^2\n");
}

TEST_CASE("identical requests produce byte-identical reports") {
  std::vector<RunRequest> requests = {
      request(Command::resolve, "12,28,33"),
      request(Command::summary, "20,165,172"),
      request(Command::bounds, "7,17,19"),
      request(Command::charts, "(1,0),(1,1),(2,3)"),
      request(Command::ideal, "(1,0),(1,1),(3,4)"),
  };
  requests[3].depth = 2;
  for (RunRequest& r : requests) {
    for (bool json : {false, true}) {
      r.json = json;
      const RunReport first = cli::run(r);
      const RunReport second = cli::run(r);
      CHECK(first.out == second.out);
      CHECK(first.err == second.err);
      CHECK(first.exit_code == second.exit_code);
    }
  }
}

TEST_CASE("json reports round-trip through a parser") {
  std::vector<RunRequest> requests = {
      request(Command::resolve, "12,28,33"),
      request(Command::resolve, "10000000000,20000000001"),
      request(Command::summary, "20,165,172"),
      request(Command::bounds, "20,165,172"),
      request(Command::charts, "(1,0),(1,1),(3,4)"),
      request(Command::ideal, "(1,0),(1,1),(1,2)"),
  };
  requests[4].depth = 1;
  for (RunRequest& r : requests) {
    r.json = true;
    const RunReport report = cli::run(r);
    REQUIRE(report.exit_code == 0);
    const ojson doc = ojson::parse(report.out);
    CHECK(doc.dump(2) + "\n" == report.out);
    CHECK(doc.contains("command"));
    CHECK(doc.contains("input"));
    CHECK(doc.contains("result"));
    CHECK(doc["status"] == 0);
  }
}

TEST_CASE("json renders large integers as decimal strings") {
  RunRequest r = request(Command::resolve, "10000000000,20000000001");
  r.json = true;
  const ojson doc = ojson::parse(cli::run(r).out);
  CHECK(doc["command"] == "resolve");
  CHECK(doc["input"][0] == "10000000000");
  CHECK(doc["result"]["eta"] == 2);
  CHECK(doc["result"]["steps"][2][0] == "1");
  CHECK(doc["result"]["steps"][2][1] == "10000000000");
  CHECK(doc["result"]["multiplicities"][0] == "10000000000");
  CHECK(doc["result"]["embedding_dims"][0] == 2);
}

TEST_CASE("json chart report carries pivots and the tree") {
  RunRequest r = request(Command::charts, "12,28,33");
  r.json = true;
  const ojson doc = ojson::parse(cli::run(r).out);
  CHECK(doc["result"]["separator"] == ojson::array({"1"}));
  CHECK(doc["result"]["charts"][0]["pivot"] == ojson::array({1}));
  CHECK(doc["result"]["charts"][0]["retained"] == true);
  CHECK(doc["result"]["charts"][1]["retained"] == false);
  const ojson& tree = doc["result"]["tree"];
  CHECK(tree["status"] == "expanded");
  CHECK(tree["children"][0]["via_pivot"] == ojson::array({1}));

  RunRequest flat = r;
  flat.depth = 0;
  CHECK(ojson::parse(cli::run(flat).out)["result"]["tree"].is_null());
}

TEST_CASE("check passes a batch of the worked examples") {
  const BatchFile batch("cli_batch_examples.txt",
                        "12,28,33\n10000000000,20000000001\n\n20,165,172\n");
  RunRequest r;
  r.command = Command::check;
  r.batch_path = batch.path;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 0);
  CHECK(report.out ==
        "line 1: {12, 28, 33}  min_monotone ok  v_drop ok  fib_lower ok"
        "  qsum_eta ok  delta_le_eta ok\n"
        "line 2: {10000000000, 20000000001}  min_monotone ok  v_drop ok"
        "  fib_lower ok  qsum_eta ok  delta_le_eta ok\n"
        "line 4: {20, 165, 172}  min_monotone ok  v_drop ok  fib_lower ok"
        "  qsum_eta ok  delta_le_eta ok\n"
        "checked 3 inputs, 0 failures\n");
}

TEST_CASE("check marks smooth lines and skips their verdicts") {
  const BatchFile batch("cli_batch_smooth.txt", "1,5\n7,17,19\n");
  RunRequest r;
  r.command = Command::check;
  r.batch_path = batch.path;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("line 1: {1, 5}  smooth\n") != std::string::npos);
  CHECK(report.out.find("checked 2 inputs, 0 failures\n") !=
        std::string::npos);
}

TEST_CASE("check reports the line number of a malformed entry") {
  const BatchFile batch("cli_batch_malformed.txt", "2,3\n4,6\n5,7\n");
  RunRequest r;
  r.command = Command::check;
  r.batch_path = batch.path;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 2);
  CHECK(report.err ==
        "error[GcdNotOne]: line 2: generators have gcd 2\n");
}

TEST_CASE("check on an empty file reports zero checks") {
  const BatchFile batch("cli_batch_empty.txt", "");
  RunRequest r;
  r.command = Command::check;
  r.batch_path = batch.path;
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 0);
  CHECK(report.out == "checked 0 inputs, 0 failures\n");
}

TEST_CASE("check fails cleanly on an unreadable batch file") {
  RunRequest r;
  r.command = Command::check;
  r.batch_path = "no_such_dir/no_such_file.txt";
  const RunReport report = cli::run(r);
  CHECK(report.exit_code == 2);
  CHECK(report.err ==
        "error[BadInput]: cannot read batch file "
        "'no_such_dir/no_such_file.txt'\n");
}

TEST_CASE("check reads standard input when the path is a dash") {
  std::istringstream fake("12,28,33\n");
  std::streambuf* old = std::cin.rdbuf(fake.rdbuf());
  RunRequest r;
  r.command = Command::check;
  r.batch_path = "-";
  const RunReport report = cli::run(r);
  std::cin.rdbuf(old);
  CHECK(report.exit_code == 0);
  CHECK(report.out.find("checked 1 inputs, 0 failures\n") !=
        std::string::npos);
}
