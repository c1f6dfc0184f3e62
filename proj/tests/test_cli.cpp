#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() / ("wmvi-cli-test-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(WMVI_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("run writes trace and certificate with the documented schemas") {
  const fs::path dir = fresh_dir("run");
  const int rc = run_cli("run --problem ratio-game --algorithm ogda-plus --a 0.33 "
                         "--gamma 0.5 --iters 2000 --out " + dir.string());
  CHECK(rc == 0);
  const std::string trace = slurp(dir / "trace.csv");
  CHECK(first_line(trace) == "k,u_0,u_1,field_norm_sq,step,oracle_calls");
  CHECK(first_line(slurp(dir / "certificate.csv")) == "k,bound,best_norm_sq,ok");
  CHECK(trace.find("\r") == std::string::npos);
}

TEST_CASE("run exits zero even without convergence") {
  const fs::path dir = fresh_dir("nonconv");
  CHECK(run_cli("run --problem lower-bound --algorithm eg-plus --a 0.25 --gamma 1 "
                "--iters 500 --out " + dir.string()) == 0);
}

TEST_CASE("configuration errors exit nonzero") {
  const fs::path dir = fresh_dir("err");
  CHECK(run_cli("run --problem no-such-thing --out " + dir.string()) != 0);
  CHECK(run_cli("run --problem ratio-game --algorithm warp-drive --out " + dir.string()) != 0);
  CHECK(run_cli("run --problem ratio-game --a -1 --out " + dir.string()) != 0);
  CHECK(run_cli("run --problem ratio-game --u0 1 --u0 2 --u0 3 --out " + dir.string()) != 0);
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  const fs::path a = fresh_dir("repro-a");
  const fs::path b = fresh_dir("repro-b");
  const std::string args = "run --problem monotone-quadratic --algorithm stoch-ogda-plus "
                           "--sigma 0.2 --batch 5 --a 0.3 --iters 300 --seed 11 --out ";
  REQUIRE(run_cli(args + a.string()) == 0);
  REQUIRE(run_cli(args + b.string()) == 0);
  CHECK(slurp(a / "trace.csv") == slurp(b / "trace.csv"));
  CHECK(slurp(a / "certificate.csv") == slurp(b / "certificate.csv"));
}

TEST_CASE("sweep emits the summary table") {
  const fs::path dir = fresh_dir("sweep");
  CHECK(run_cli("sweep --problem lower-bound --algorithm ogda-plus --iters 300 "
                "--sweep a=0.1,0.2 --sweep gamma=0.5,1 --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "sweep.csv");
  CHECK(first_line(csv) ==
        "a,gamma,status,best_norm_sq,best_index,iterations,oracle_calls,final_step");
  // header + 4 cells
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("signmap emits the grid") {
  const fs::path dir = fresh_dir("signmap");
  CHECK(run_cli("signmap --problem monotone-quadratic --x-lo -1 --x-hi 1 --y-lo -1 "
                "--y-hi 1 --nx 11 --ny 11 --out " + dir.string()) == 0);
  const std::string csv = slurp(dir / "signmap.csv");
  CHECK(first_line(csv) == "x,y,sign");
  CHECK(csv.find(",-1\n") == std::string::npos);  // monotone: no negative cells
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 122);
}

TEST_CASE("validate reports the verdict") {
  const fs::path dir = fresh_dir("validate");
  const std::string out = (dir / "stdout.txt").string();
  const std::string cmd = std::string(WMVI_CLI_PATH) +
                          " validate --problem monotone-quadratic --a 0.3 --gamma 0.5 > " + out;
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(slurp(out).find("verdict=PASS") != std::string::npos);

  const std::string cmd2 = std::string(WMVI_CLI_PATH) +
                           " validate --problem lower-bound --a 0.33 --gamma 0.5 > " + out;
  REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
  CHECK(slurp(out).find("verdict=THEORY-GAP") != std::string::npos);

  // polar game has no stored constants: configuration error
  CHECK(run_cli("validate --problem polar-game --a 0.1 --gamma 0.5") == 2);
}

TEST_CASE("output directory honors the environment variable") {
  const fs::path dir = fresh_dir("envvar");
  const std::string cmd = "WMVI_OUT_DIR=" + dir.string() + " " + std::string(WMVI_CLI_PATH) +
                          " run --problem ratio-game --iters 50 > /dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(fs::exists(dir / "trace.csv"));
}

TEST_CASE("config file values are read and flags override them") {
  const fs::path dir = fresh_dir("config");
  {
    std::ofstream cfg(dir / "exp.cfg");
    cfg << "problem=ratio-game\na=0.33\ngamma=0.5\niters=2000\n";
  }
  REQUIRE(run_cli("run --config " + (dir / "exp.cfg").string() + " --out " + dir.string()) == 0);
  const std::string base = slurp(dir / "trace.csv");
  CHECK(base.find(",0.33000000000000002,") != std::string::npos);

  REQUIRE(run_cli("run --config " + (dir / "exp.cfg").string() + " --a 0.2 --out " +
                  dir.string()) == 0);
  CHECK(slurp(dir / "trace.csv").find(",0.20000000000000001,") != std::string::npos);
}
