#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latcon/cli.hpp"
#include "latcon/table.hpp"

using namespace latcon;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "latcon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("latcon_test_" + name);
}

}  // namespace

TEST_CASE("documented examples") {
  auto h = run({"coverings", "--model", "dimer3d", "--side", "4"});
  CHECK(h.code == 0);
  CHECK(h.out.find("5051532105") != std::string::npos);

  auto kb = run({"perc", "exact", "kb-tri"});
  CHECK(kb.code == 0);
  CHECK(kb.out.find("0.1118442752845497") != std::string::npos);

  auto w = run({"walks", "--dim", "2", "--max-n", "3", "--format", "json"});
  REQUIRE(w.code == 0);
  auto tables = tables_from_json(w.out);
  REQUIRE(!tables.empty());
  std::vector<std::string> c;
  for (const auto& row : tables[0].rows) c.push_back(row[1]);
  CHECK(c == std::vector<std::string>{"1", "4", "12", "36"});
}

TEST_CASE("error exit codes") {
  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  auto bad_flag = run({"walks", "--max-n", "4", "--bogus"});
  CHECK(bad_flag.code == 2);
  auto domain = run({"coverings", "--model", "dimer2d"});
  CHECK(domain.code == 2);
  auto j = nlohmann::json::parse(domain.err);
  CHECK(j.at("exit_code") == 2);
  CHECK(j.contains("message"));

  auto budget = run({"--budget", "1000", "walks", "--max-n", "20"});
  CHECK(budget.code == 3);
  CHECK(nlohmann::json::parse(budget.err).at("exit_code") == 3);
}

TEST_CASE("identical runs give byte-identical JSON") {
  std::vector<std::string> mc = {"--format", "json", "perc", "--mode", "bond",
                                 "--side", "16", "--trials", "500", "--seed", "5"};
  auto with = [&](std::string threads) {
    auto args = mc;
    args.insert(args.begin(), {"--threads", threads});
    return run(args);
  };
  auto a = with("1"), b = with("1"), c = with("4");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  auto w1 = run({"--format", "json", "--threads", "1", "walks", "--max-n", "10"});
  auto w3 = run({"--format", "json", "--threads", "3", "walks", "--max-n", "10"});
  CHECK(w1.out == w3.out);
  CHECK(tables_from_json(w1.out) == tables_from_json(w3.out));
}

TEST_CASE("output file and metadata side channel") {
  auto out = temp_path("out.json"), meta = temp_path("meta.json"), census = temp_path("census.json");
  auto r = run({"--format", "json", "--output", out.string(), "--meta", meta.string(), "walks",
                "--max-n", "5", "--census", census.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  auto tables = tables_from_json(slurp(out));
  CHECK(tables[0].rows.size() == 6);
  auto m = nlohmann::json::parse(slurp(meta));
  CHECK(m.contains("started_utc"));
  CHECK(m.contains("elapsed_seconds"));
  auto c = nlohmann::json::parse(slurp(census));
  CHECK(c.at("counts").at("values").at("5") == "284");
  std::filesystem::remove(out);
  std::filesystem::remove(meta);
  std::filesystem::remove(census);
}

TEST_CASE("subcommands render in every format") {
  for (std::string fmt : {"csv", "json", "table"}) {
    CHECK(run({"--format", fmt, "animals", "--max-n", "6"}).code == 0);
    CHECK(run({"--format", fmt, "ising", "--side", "6", "--max-bonds", "6"}).code == 0);
    CHECK(run({"--format", fmt, "entropy", "--model", "hardsquare", "--max-n", "6"}).code == 0);
    CHECK(run({"--format", fmt, "report"}).code == 0);
  }
  auto csv = run({"--format", "csv", "coverings", "--model", "monomer-dimer", "--max-n", "3"});
  CHECK(csv.out.find("\n3,131") != std::string::npos);
}
