#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pasfrac_tools/cli.hpp"

using pasfrac::tools::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.emplace_back("--format");
  args.emplace_back("json");
  const Run r = cli(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(json_of({"phi", "-p", "2", "--form", "xy", "-q", "4"})["value"] == 3);
  CHECK(json_of({"phi", "-p", "2", "--form", "xpy", "-q", "7"})["value"] == 3);
  CHECK(json_of({"phi", "-p", "2", "--form", "xy", "-q", "-1"})["value"] == 0);
  const auto brute = json_of({"phi", "-p", "2", "--form", "xy", "-q", "4", "--method", "brute"});
  CHECK(brute["method"] == "brute");
  CHECK(json_of({"phi", "-p", "3", "--form", "linear:2,1", "-q", "6"})["value"] == 2);
  const auto range = json_of({"phi", "-p", "2", "--form", "xpy", "--from", "0", "--to", "9"});
  REQUIRE(range.is_array());
  CHECK(range.size() == 9);
  CHECK(range[8]["value"] == 1);
}

TEST_CASE("records carry the stable keys") {
  const auto j = json_of({"sum", "-p", "2", "--form", "xy", "-u", "4"});
  for (const char* key : {"op", "inputs", "value", "method", "paper_ref"}) CHECK(j.contains(key));
  CHECK(j["value"] == 5);
}

TEST_CASE("sum and coeff examples") {
  CHECK(json_of({"sum", "-p", "2", "--form", "xpy", "-u", "9"})["value"] == 14);
  CHECK(json_of({"sum", "-p", "2", "--form", "xpy", "-u", "1", "--scaled", "3"})["value"] == 13);
  const auto c = json_of({"coeff", "-p", "2", "--form", "x", "-u", "1048576"});
  CHECK(c["value"]["decimal"] == "1");
  CHECK(c["value"]["precision_bits"] == 128);
}

TEST_CASE("accumulation examples") {
  const Run r = cli({"accum", "-p", "2", "--form", "xy", "-u", "3", "--digits", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.525899") != std::string::npos);
  CHECK(json_of({"accum", "-p", "2", "--form", "xpy", "-u", "1"})["value"]["decimal"] == "0.4");
  CHECK(json_of({"accum", "-p", "5", "--form", "xy", "-u", "1"})["value"]["decimal"] == "0.5");
  const auto e = json_of({"accum", "-p", "2", "--form", "xy", "-u", "17", "--expect", "0.487836"});
  CHECK(e["matches"] == true);
  CHECK(cli({"accum", "-p", "3", "--form", "xpy", "-u", "1"}).code == pasfrac::tools::kExitUsage);
}

TEST_CASE("zeta, render and scan") {
  const auto z = json_of({"zeta", "-p", "2", "--form", "xy", "--sigma", "2", "--t", "0", "-U", "4096"});
  CHECK(z["tail_bound_heuristic"] == true);
  CHECK(cli({"zeta", "-p", "2", "--form", "xy", "--sigma", "1.5"}).code == pasfrac::tools::kExitUsage);

  const auto path = std::filesystem::temp_directory_path() / "pasfrac_cli_render.pbm";
  CHECK(cli({"render", "-p", "3", "--rows", "27", "-o", path.string()}).code == 0);
  std::ifstream got(path);
  std::ifstream want(std::filesystem::path(PASFRAC_GOLDEN_DIR) / "pas3_27.pbm");
  std::stringstream a;
  std::stringstream b;
  a << got.rdbuf();
  b << want.rdbuf();
  CHECK(a.str() == b.str());
  std::filesystem::remove(path);
  CHECK(cli({"render", "-p", "2", "-o", "/nonexistent-dir/x.pbm"}).code == pasfrac::tools::kExitUsage);

  const auto scan = json_of({"scan", "-p", "2", "--form", "xy", "--umax", "64"});
  REQUIRE(scan.is_array());
  CHECK(scan.size() == 65);
  CHECK(scan[2]["limit"]["decimal"].get<std::string>().rfind("0.5258985309974556918", 0) == 0);
  CHECK(scan[16]["limit"]["decimal"].get<std::string>().rfind("0.4878360128828703196", 0) == 0);
  CHECK(scan[64]["op"] == "scan");
}

TEST_CASE("csv and text formats") {
  const Run csv = cli({"phi", "-p", "2", "--form", "xy", "--from", "0", "--to", "3", "--format", "csv"});
  CHECK(csv.out.rfind("op,p,form,q,value,method,paper_ref\n", 0) == 0);
  CHECK(csv.out.find("phi,2,X+Y,2,2,recurrence") != std::string::npos);
  const Run text = cli({"phi", "-p", "2", "--form", "xy", "-q", "4"});
  CHECK(text.out == "phi p=2 form=X+Y q=4 -> 3 [recurrence]\n");
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"phi", "-p", "4", "-q", "1"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"phi", "--form", "nope", "-q", "1"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"phi", "--form", "x", "-q", "1", "--method", "recurrence"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"sum", "-u", "0"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"sum", "-u", "1", "--precision", "32"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"phi", "-q", "abc"}).code == pasfrac::tools::kExitUsage);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("precision from environment, config file and flags") {
  setenv("PASCAL_FRACTAL_PRECISION", "256", 1);
  const int env_bits = json_of({"coeff", "-u", "3"})["value"]["precision_bits"];
  CHECK(env_bits >= 256);
  CHECK(env_bits < 264);
  const auto cfg = std::filesystem::temp_directory_path() / "pasfrac_cli.cfg";
  {
    std::ofstream f(cfg);
    f << "precision=192\nprime=3\nform=xpy\n";
  }
  const auto from_file = json_of({"sum", "-u", "27", "--config", cfg.string()});
  CHECK(from_file["inputs"]["p"] == 3);
  CHECK(from_file["value"] == 73);
  const int cfg_bits = json_of({"coeff", "-u", "3", "--config", cfg.string()})["value"]["precision_bits"];
  CHECK(cfg_bits >= 192);
  CHECK(cfg_bits < 200);
  CHECK(json_of({"coeff", "-u", "3", "--config", cfg.string(), "--precision", "64"})["value"]["precision_bits"] ==
        65);
  unsetenv("PASCAL_FRACTAL_PRECISION");
  std::filesystem::remove(cfg);
}

TEST_CASE("verify with a reduced range and an injected fault") {
  const auto report = std::filesystem::temp_directory_path() / "pasfrac_verify.json";
  const Run ok = cli({"verify", "--umax", "300", "--primes", "2,3", "--stolarsky-max", "5000", "--report",
                      report.string(), "--golden-dir", PASFRAC_GOLDEN_DIR});
  CHECK(ok.code == 0);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["value"] == "PASS");
  CHECK(j["checks"].size() == 11);
  for (const auto& c : j["checks"]) CHECK(c.contains("paper_ref"));

  const Run bad = cli({"verify", "--umax", "300", "--primes", "2", "--stolarsky-max", "5000", "--inject-fault",
                       "accumulation-constants"});
  CHECK(bad.code == pasfrac::tools::kExitVerifyFailed);
  CHECK(bad.out.find("verify: FAIL accumulation-constants") != std::string::npos);
  std::filesystem::remove(report);
}
