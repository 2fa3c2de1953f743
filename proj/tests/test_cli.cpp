#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lenslab/cli.hpp"
#include "lenslab/io.hpp"

using namespace lenslab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

fs::path scratch(const std::string& name) {
  const auto path = fs::temp_directory_path() / ("lenslab_test_" + name);
  fs::remove(path);
  fs::remove(path.string() + ".tmp");
  return path;
}

}  // namespace

TEST_CASE("d csv matches the library") {
  const auto r = run({"d", "7", "2", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  std::string expected = std::string(io::kDTableHeader) + "\n";
  for (const auto& row : io::dtable_csv_rows(d_table(canonical(7, 2)))) expected += row + "\n";
  CHECK(r.out == expected);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  CHECK(ls[1] == "7,2,0,-9/14");
  CHECK(ls[5] == "7,2,4,1/2");
  CHECK(ls[7] == "7,2,6,3/14");
}

TEST_CASE("global options may precede the command") {
  CHECK(run({"--format", "csv", "d", "7", "2"}).out == run({"d", "7", "2", "--format", "csv"}).out);
}

TEST_CASE("d json rows") {
  const auto r = run({"d", "7", "2", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  const auto row = io::Json::parse(ls[4]);
  CHECK(row.at("i") == 4);
  CHECK(row.at("d") == "1/2");
}

TEST_CASE("lambda and cf") {
  const auto csv = run({"lambda", "12", "7", "--format", "csv"});
  REQUIRE(csv.code == cli::kOk);
  CHECK(lines(csv.out).at(1) == io::csv_row(io::lambda_record(canonical(12, 7))));
  CHECK(lines(csv.out).at(1) == "12,7,-1/72,9/1");
  const auto cf = run({"cf", "12", "7", "--format", "json"});
  REQUIRE(cf.code == cli::kOk);
  CHECK(cf.out.find("[2,4,2]") != std::string::npos);
}

TEST_CASE("obstruct") {
  const auto r = run({"obstruct", "7", "2", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto j = io::Json::parse(r.out);
  CHECK(j.at("minimal_genus") == 1);
  CHECK(j.at("lens").at("q") == 2);
  CHECK(j.at("feasible").at(0).at("h") == io::Json::array({1, 0, 0, 0}));

  const auto g3 = io::Json::parse(run({"obstruct", "13", "3", "--format", "json"}).out);
  CHECK(g3.at("minimal_genus") == 3);

  CHECK(run({"obstruct", "7", "1", "--expect-feasible"}).code == cli::kFailed);
  CHECK(run({"obstruct", "7", "2", "--expect-feasible"}).code == cli::kOk);
  CHECK(run({"obstruct", "13", "3", "--gmax", "2", "--expect-feasible"}).code == cli::kFailed);
}

TEST_CASE("borromean accepts negative k") {
  const auto r = run({"borromean", "9", "-2", "3", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("-13/9") != std::string::npos);
}

TEST_CASE("verifications") {
  const auto dbound = run({"verify-dbound", "--pmax", "100"});
  CHECK(dbound.code == cli::kOk);
  CHECK(dbound.out.find(" 0 violations\n") != std::string::npos);
  const auto all = lines(run({"verify-dbound", "--pmax", "7", "--all", "--format", "csv"}).out);
  REQUIRE(all.size() == 2 + 1 + 2 + 2 + 3 + 2 + 4);
  CHECK(all.at(1) == io::kCensusHeader);
  const auto dcw = run({"verify-dcw", "--pmax", "40", "--format", "csv"});
  CHECK(dcw.code == cli::kOk);
  CHECK(lines(dcw.out) == std::vector<std::string>{"verify-dcw: pmax=40 pairs=490 0 violations"});
  const auto sharp = run({"sharpness", "--kmax", "4", "--format", "csv"});
  CHECK(sharp.code == cli::kOk);
  CHECK(lines(sharp.out).size() == 5);
  const auto torus = run({"census-torus", "--ab-max", "30", "--format", "csv"});
  CHECK(torus.code == cli::kOk);
  const auto t1 = run({"table1", "--xmin", "4", "--xmax", "6", "--format", "csv"});
  CHECK(t1.code == cli::kOk);
  CHECK(lines(t1.out).size() == 1 + 7 * 3);
  const auto sq = run({"squares", "--pmax", "60", "--q", "3", "--format", "csv"});
  CHECK(sq.code == cli::kOk);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run({}).code == cli::kInvalidInput);
  CHECK(run({"bogus"}).code == cli::kInvalidInput);
  CHECK(run({"d", "7"}).code == cli::kInvalidInput);
  CHECK(run({"d", "6", "4"}).code == cli::kInvalidInput);
  CHECK(run({"d", "0", "1"}).code == cli::kInvalidInput);
  CHECK(run({"d", "7", "x"}).code == cli::kInvalidInput);
  CHECK(run({"d", "7", "2", "--format", "xml"}).code == cli::kInvalidInput);
  CHECK(run({"verify-dbound", "--pmax", "1"}).code == cli::kInvalidInput);
  CHECK(run({"squares", "--q", "5"}).code == cli::kInvalidInput);
  CHECK(run({"obstruct", "7", "2", "--frobnicate"}).code == cli::kInvalidInput);
  const auto r = run({"bogus"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is byte-stable across runs and job counts") {
  const auto a = run({"--jobs", "1", "verify-dbound", "--pmax", "60", "--all", "--format", "csv"});
  const auto b = run({"--jobs", "4", "verify-dbound", "--pmax", "60", "--all", "--format", "csv"});
  const auto c = run({"--jobs", "4", "verify-dbound", "--pmax", "60", "--all", "--format", "csv"});
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

TEST_CASE("cache round trip") {
  const auto path = scratch("cache.jsonl");
  const auto first = run({"--cache", path.string(), "obstruct", "13", "3", "--format", "json"});
  REQUIRE(first.code == cli::kOk);
  REQUIRE(fs::exists(path));
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == R"({"schema":"lenslab-cache","version":1})");

  const auto second = run({"--cache", path.string(), "obstruct", "13", "3", "--format", "json"});
  CHECK(second.out == first.out);
  CHECK(second.err.find("loaded 0") == std::string::npos);
  CHECK(second.err.find("discarded 0") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("tampered cache entries are discarded") {
  const auto path = scratch("tampered.jsonl");
  {
    std::ofstream out(path);
    out << R"({"schema":"lenslab-cache","version":1})" << '\n';
    out << R"({"p":7,"q":2,"lambda":"-1/14","d":["-9/14","-9/14","3/14","-1/14","1/2","-1/14","3/14"]})" << '\n';
    out << R"({"p":7,"q":3,"lambda":"5/7","d":["0/1","0/1","0/1","0/1","0/1","0/1","5/1"]})" << '\n';
    out << R"({"p":7,"q":1,"lambda":"-5/14","d":["0/1"]})" << '\n';
    out << "not json\n";
  }
  const auto r = run({"--cache", path.string(), "d", "7", "3", "--format", "csv"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.err.find("loaded 1, discarded 3") != std::string::npos);
  CHECK(r.out == run({"d", "7", "3", "--format", "csv"}).out);

  {
    std::ofstream out(path);
    out << R"({"schema":"lenslab-cache","version":99})" << '\n';
    out << R"({"p":7,"q":2,"lambda":"-1/14","d":["-9/14","-9/14","3/14","-1/14","1/2","-1/14","3/14"]})" << '\n';
  }
  const auto bad_header = run({"--cache", path.string(), "d", "7", "2"});
  CHECK(bad_header.code == cli::kOk);
  CHECK(bad_header.err.find("loaded 0, discarded 1") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("cache path from the environment") {
  const auto env_path = scratch("env.jsonl");
  const auto flag_path = scratch("flag.jsonl");
  ::setenv("LENSLAB_CACHE", env_path.string().c_str(), 1);
  CHECK(run({"d", "11", "3"}).code == cli::kOk);
  CHECK(fs::exists(env_path));
  CHECK(run({"--cache", flag_path.string(), "d", "11", "3"}).code == cli::kOk);
  CHECK(fs::exists(flag_path));
  ::unsetenv("LENSLAB_CACHE");
  fs::remove(env_path);
  fs::remove(flag_path);
}
