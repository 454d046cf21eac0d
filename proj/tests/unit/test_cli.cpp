#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"

using namespace ghom;
using namespace ghom::test;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
  fs::path out_file = dir / "cli_stdout.txt";
  std::string cmd = std::string(GHOM_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return RunResult{WEXITSTATUS(rc), ss.str()};
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "ghom_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli: example then tensor reproduces the torsion count") {
  fs::path dir = temp_dir();
  auto ex = run_cli("example --name cautionary2x2 --n 2 --emit " + (dir / "ex").string(), dir);
  REQUIRE(ex.exit_code == 0);
  std::string module_path = ex.out.substr(0, ex.out.find('\n'));
  auto t = run_cli("tensor " + module_path + " " + module_path + " --invariants h0", dir);
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("\"h0\": 4") != std::string::npos);
}

TEST_CASE("cli: compute on the irrelevant ideal") {
  fs::path dir = temp_dir();
  auto ex = run_cli("example --name maximal_ideal --d 2 --emit " + (dir / "ex").string(), dir);
  REQUIRE(ex.exit_code == 0);
  std::string module_path = ex.out.substr(0, ex.out.find('\n'));
  fs::path out = dir / "inv.json";
  auto c = run_cli("compute --module " + module_path + " --out " + out.string(), dir);
  REQUIRE(c.exit_code == 0);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"hdeg\": 2") != std::string::npos);
}

TEST_CASE("cli: verify on an empty corpus exits cleanly") {
  fs::path dir = temp_dir();
  fs::path corpus = dir / "empty.json";
  std::ofstream(corpus) << R"({"p":32003,"variables":["x","y"],"seed":1,"groups":[]})";
  auto v = run_cli("verify --corpus " + corpus.string(), dir);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("\"items\": 0") != std::string::npos);
}

TEST_CASE("cli: probe reports the square of the irrelevant ideal") {
  fs::path dir = temp_dir();
  auto ex = run_cli("example --name maximal_ideal --d 2 --emit " + (dir / "ex").string(), dir);
  std::string module_path = ex.out.substr(0, ex.out.find('\n'));
  auto p = run_cli("probe --module " + module_path + " --emax 2", dir);
  REQUIRE(p.exit_code == 0);
  CHECK(p.out.find("\"e_found\": 2") != std::string::npos);
  SUBCASE("budget exhaustion exits 3") {
    auto q = run_cli("probe --module " + module_path + " --emax 3 --budget 1", dir);
    CHECK(q.exit_code == 3);
  }
}

TEST_CASE("cli: parse failures exit 1 with a machine-readable diagnostic") {
  fs::path dir = temp_dir();
  fs::path bad = dir / "bad.json";
  std::ofstream(bad) << R"({"variables":["x","y"],"row_twists":[0],"matrix":[["x + x^2"]]})";
  fs::path err_file = dir / "stderr.txt";
  std::string cmd = std::string(GHOM_CLI_PATH) + " compute --module " + bad.string() +
                    " >/dev/null 2>" + err_file.string();
  int rc = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(rc) == 1);
  std::ifstream in(err_file);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("{\"error\":{\"code\":\"homogeneity\"") != std::string::npos);
  auto u = run_cli("definitely-not-a-subcommand", dir);
  CHECK(u.exit_code == 1);
}

TEST_CASE("cli: fuzz emits a deterministic report") {
  fs::path dir = temp_dir();
  fs::path out1 = dir / "fuzz1.json", out2 = dir / "fuzz2.json";
  auto a = run_cli("fuzz --seed 9 --count 2 --d 2 --bounds nagel,degandbetti --out " + out1.string(),
                   dir);
  REQUIRE(a.exit_code == 0);
  auto b = run_cli("fuzz --seed 9 --count 2 --d 2 --bounds nagel,degandbetti --out " + out2.string(),
                   dir);
  REQUIRE(b.exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  std::ostringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK(s1.str().find("\"seed\": 9") != std::string::npos);
}
