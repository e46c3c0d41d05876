#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "doctest.h"
#include "eulerheat/cli.hpp"
#include "eulerheat/errors.hpp"

using namespace eulerheat;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Runs the installed binary through the shell; stdout captured, stderr discarded.
Result run_binary(const std::string& args) {
  const char* bin = std::getenv("EULERHEAT_BIN");
  Result r;
  if (!bin) return r;
  FILE* pipe = popen((std::string(bin) + " " + args + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("eulerheat_test_" + name);
}

}  // namespace

TEST_CASE("make_family and make_eos") {
  const auto f = cli::make_family("a-cubic", {{"alpha", 2.0}, {"c1", 0.5}});
  CHECK(std::get<ACubic>(f).alpha == 2.0);
  CHECK(std::get<ACubic>(f).c1 == 0.5);
  CHECK_THROWS_AS(cli::make_family("b-travel", {{"alpha", 1.0}}), ParameterError);
  CHECK_THROWS_AS(cli::make_family("e-unknown", {}), ParameterError);
  CHECK(std::holds_alternative<VanDerWaals>(cli::make_eos("vdw", {})));
  CHECK(std::get<Polytropic>(cli::make_eos("polytropic", {{"n", 2.0}})).n == 2.0);
  CHECK_THROWS_AS(cli::make_eos("ideal", {}), ParameterError);
}

TEST_CASE("write_csv leaves absent fields empty") {
  std::ostringstream os;
  cli::write_csv(os, {EvalRow{0.5, 1.0, 2.0, std::nullopt, std::nullopt}, EvalRow{0.1, 2.0, 3.0, -1.0, 0.25}});
  CHECK(os.str() == "x,t,rho,v,T\n0.5,1,2,,\n0.10000000000000001,2,3,-1,0.25\n");
}

TEST_CASE("eval b-travel: header, rows, no temperature") {
  const auto r = run({"eval", "--family", "b-travel", "--a", "1", "--b", "1", "--c1", "1", "--c2", "1", "--nx", "5",
                      "--times", "1,2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 11);
  CHECK(ls[0] == "x,t,rho,v,T");
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].back() == ',');
}

TEST_CASE("eval output is deterministic") {
  const std::vector<std::string> args{"eval", "--family", "c-gauss", "--nx", "33", "--t-min", "1", "--t-max", "3",
                                      "--nt", "3"};
  CHECK(run(args).out == run(args).out);
  const auto a = run_binary("eval --family d-virial --x-min -1 --x-max 1 --nx 21");
  const auto b = run_binary("eval --family d-virial --x-min -1 --x-max 1 --nx 21");
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}

TEST_CASE("eval json") {
  const auto r = run({"eval", "--family", "a-cubic", "--nx", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "a-cubic");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0].contains("T"));
}

TEST_CASE("eval to a file") {
  const auto path = temp_file("eval.csv");
  const auto r = run({"eval", "--family", "c-travel", "--nx", "4", "--output", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x,t,rho,v,T");
  std::filesystem::remove(path);
}

TEST_CASE("config file supplies options, flags override") {
  const auto path = temp_file("config.toml");
  {
    std::ofstream cfg(path);
    cfg << "[eval]\nfamily = \"c-gauss\"\nnx = 3\ngamma = 2\n";
  }
  const auto from_file = run({"--config", path.string(), "eval"});
  REQUIRE(from_file.code == 0);
  CHECK(lines(from_file.out).size() == 4);
  const auto overridden = run({"--config", path.string(), "eval", "--nx", "5"});
  CHECK(lines(overridden.out).size() == 6);
  const auto direct = run({"eval", "--family", "c-gauss", "--gamma", "2", "--nx", "3"});
  CHECK(direct.out == from_file.out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kConfigError);
  CHECK(run({"eval"}).code == cli::kConfigError);
  CHECK(run({"eval", "--family", "nope"}).code == cli::kConfigError);
  CHECK(run({"eval", "--family", "b-travel", "--alpha", "1"}).code == cli::kConfigError);
  CHECK(run({"eval", "--family", "a-cubic", "--format", "text"}).code == cli::kConfigError);
  CHECK(run({"eval", "--family", "a-cubic", "--a", "-1"}).code == cli::kConfigError);
  CHECK(run({"verify", "--family", "a-cubic", "--as-printed", "--alpha", "2", "--c1", "0.5"}).code ==
        cli::kVerificationFailed);
  CHECK(run({"verify", "--family", "a-cubic"}).code == cli::kOk);
  CHECK(run({"simulate", "--family", "a-cubic", "--c1", "1", "--x-min", "0", "--x-max", "1", "--nx", "201",
             "--t-end", "50", "--budget", "0"})
            .code == cli::kNumericalFailure);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("constraints command") {
  const auto vdw = run({"constraints", "--eos", "vdw"});
  CHECK(vdw.code == 0);
  CHECK(lines(vdw.out).at(0) == "infeasible");
  const auto poly = run({"constraints", "--eos", "polytropic", "--n", "3"});
  CHECK(lines(poly.out).at(0) == "feasible");
  CHECK(poly.out.find("gamma = 1/2") != std::string::npos);

  const auto bin = run_binary("constraints --eos vdw");
  if (std::getenv("EULERHEAT_BIN")) {
    CHECK(bin.code == 0);
    CHECK(bin.out.rfind("infeasible", 0) == 0);
  }
}

TEST_CASE("collapse and erratum commands") {
  const auto c = run({"collapse", "--family", "a-cubic"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["max_pairwise_deviation"].get<double>() < 1e-10);
  CHECK(run({"collapse", "--family", "b-travel"}).code == cli::kConfigError);

  const auto e = run({"erratum"});
  CHECK(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["entries"].size() >= 6);
}

TEST_CASE("simulate command") {
  const auto r = run({"simulate", "--family", "a-cubic", "--c1", "1", "--x-min", "0", "--x-max", "1", "--nx", "11",
                      "--t-end", "1.05", "--snapshots", "2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 1 + 3 * 11);
  const auto p = run({"simulate", "--porous", "--x-min", "-4", "--x-max", "4", "--nx", "41", "--t-end", "2",
                      "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["snapshots"].size() == 1);
  CHECK(run({"simulate", "--porous", "--c1", "1"}).code == cli::kConfigError);
  CHECK(run({"simulate"}).code == cli::kConfigError);
}

TEST_CASE("verify suite subsets") {
  const auto r = run({"verify", "--suite", "constraints"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 10") != std::string::npos);
  const auto j = run({"verify", "--criteria", "1,7", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["criteria"].size() == 2);
  CHECK(run({"verify", "--criteria", "11"}).code == cli::kConfigError);
  CHECK(run({"verify", "--suite", "everything"}).code == cli::kConfigError);
}
