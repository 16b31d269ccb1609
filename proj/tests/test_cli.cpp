// End-to-end checks of the command-line tool: runs the built binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

constexpr double kPi = std::numbers::pi;

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

RunResult run_cli(const std::string& args) {
  static int serial = 0;
  std::string out_path = "cli_stdout_" + std::to_string(serial) + ".txt";
  std::string err_path = "cli_stderr_" + std::to_string(serial) + ".txt";
  ++serial;
  std::string cmd = std::string(GCF_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return {code, slurp(out_path), slurp(err_path)};
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream is(text);
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    if (first) {
      while (std::getline(ls, cell, ',')) csv.header.push_back(cell);
      first = false;
    } else {
      std::vector<double> row;
      while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

}  // namespace

TEST_CASE("spectrum of the decaying well emits exactly the bound levels") {
  RunResult r = run_cli("spectrum --kind exp --B 1 --theta 0.3141593 --mu 1 --k 6 --n-max 10");
  REQUIRE(r.exit_code == 0);
  Csv csv = parse_csv(r.out);
  CHECK(csv.header == std::vector<std::string>{"n", "eps_re", "eps_im", "E_re", "E_im", "E_abs",
                                               "E_arg"});
  REQUIRE(csv.rows.size() == 6);  // n = 0..5 only
  for (size_t i = 0; i < csv.rows.size(); ++i) {
    CHECK(csv.rows[i][0] == static_cast<double>(i));
    CHECK(std::abs(csv.rows[i][4]) < 1e-12);  // E_im
  }
}

TEST_CASE("uniform-field spectrum values") {
  RunResult r = run_cli("spectrum --kind constant --B 0.5 --theta 0 --k 1 --n-max 3");
  REQUIRE(r.exit_code == 0);
  Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 4);
  double expect[4] = {0.0, 1.0, std::sqrt(2.0), std::sqrt(3.0)};
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(csv.rows[n][3] - expect[n]) < 1e-12);
  }
}

TEST_CASE("holes negate the energies") {
  RunResult e = run_cli("spectrum --preset fig9 --n-max 3");
  RunResult h = run_cli("spectrum --preset fig9 --n-max 3 --holes");
  REQUIRE(e.exit_code == 0);
  REQUIRE(h.exit_code == 0);
  Csv ce = parse_csv(e.out), ch = parse_csv(h.out);
  REQUIRE(ce.rows.size() == ch.rows.size());
  for (size_t i = 0; i < ce.rows.size(); ++i) {
    CHECK(ch.rows[i][3] == -ce.rows[i][3]);
    CHECK(ch.rows[i][4] == -ce.rows[i][4]);
  }
}

TEST_CASE("validation failures exit 1 and name the violated window") {
  auto t0 = std::chrono::steady_clock::now();
  RunResult r = run_cli("spectrum --kind exp --B 1 --theta 2.0 --mu 1 --k 6");
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("(-pi/2, pi/2)") != std::string::npos);
  CHECK(r.err.find("EXP") != std::string::npos);
  CHECK(dt < 2.0);  // rejected before any solver runs

  RunResult r2 = run_cli("spectrum --kind constant --B 1 --theta 0 --k 1 --no-such-flag");
  CHECK(r2.exit_code == 1);

  RunResult r3 = run_cli("sweep --kind exp --B 1 --theta 0 --mu 1 --k-start 1 --k-stop 2");
  CHECK(r3.exit_code == 1);  // incomplete range spec

  RunResult r4 = run_cli("spectrum --kind trig --B 4 --theta 0 --mu -1 --k 1");
  CHECK(r4.exit_code == 1);

  RunResult r5 = run_cli("spectrum --preset fig9 --output /no_such_dir/out.csv");
  CHECK(r5.exit_code == 1);
  CHECK(r5.err.find("/no_such_dir/out.csv") != std::string::npos);
}

TEST_CASE("identical configs give byte-identical artifacts") {
  std::string base =
      "observables --preset fig3 --n-max 2 --n-points 101 ";
  RunResult a = run_cli(base + "--output det_a.csv");
  RunResult b = run_cli(base + "--output det_b.csv");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  std::string fa = slurp("det_a.csv"), fb = slurp("det_b.csv");
  CHECK(fa.size() > 1000);
  CHECK(fa == fb);

  // the JSON meta echoes the output path, so identical runs must reuse it
  RunResult ja = run_cli(base + "--format json --output det.json");
  REQUIRE(ja.exit_code == 0);
  std::string first = slurp("det.json");
  RunResult jb = run_cli(base + "--format json --output det.json");
  REQUIRE(jb.exit_code == 0);
  CHECK(first == slurp("det.json"));
  CHECK(first.size() > 1000);
}

TEST_CASE("sweep is deterministic across thread counts") {
  std::string base = "sweep --preset fig3 --k-start -3 --k-stop 3 --k-steps 41 --n-max 4 ";
  ::setenv("GRAPHENE_CFIELD_THREADS", "1", 1);
  RunResult a = run_cli(base + "--output sw1.csv");
  ::setenv("GRAPHENE_CFIELD_THREADS", "7", 1);
  RunResult b = run_cli(base + "--output sw7.csv");
  ::unsetenv("GRAPHENE_CFIELD_THREADS");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp("sw1.csv") == slurp("sw7.csv"));
}

TEST_CASE("json meta echoes the configuration exactly") {
  RunResult r = run_cli("spectrum --kind trig --B 4 --theta 0.3141592653589793 --mu 1 --k -2 "
                        "--n-max 2 --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["kind"] == "trig");
  CHECK(j["meta"]["theta"].get<double>() == 0.3141592653589793);
  CHECK(j["meta"]["B_modulus"].get<double>() == 4.0);
  CHECK(j["meta"]["command"] == "spectrum");
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("config file drives a run and flags override it") {
  {
    std::ofstream f("run_cfg.json");
    f << R"({"kind":"exp","B_modulus":1.0,"theta":0.3141593,"mu":1.0,"k":6.0,"n_max":10,)"
      << R"("output":{"format":"csv","path":""}})";
  }
  RunResult from_cfg = run_cli("spectrum --config run_cfg.json");
  RunResult from_flags =
      run_cli("spectrum --kind exp --B 1 --theta 0.3141593 --mu 1 --k 6 --n-max 10");
  REQUIRE(from_cfg.exit_code == 0);
  CHECK(from_cfg.out == from_flags.out);

  RunResult overridden = run_cli("spectrum --config run_cfg.json --n-max 2");
  Csv csv = parse_csv(overridden.out);
  CHECK(csv.rows.size() == 3);

  RunResult missing = run_cli("spectrum --config does_not_exist.json");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("states sampling") {
  RunResult r = run_cli("states --preset fig9 --n-max 1 --n-points 51");
  REQUIRE(r.exit_code == 0);
  Csv csv = parse_csv(r.out);
  CHECK(csv.header[2] == "psi_plus_re");
  REQUIRE(csv.rows.size() == 2 * 51);
  // level 0 has no upper component anywhere
  for (int i = 0; i < 51; ++i) {
    CHECK(csv.rows[i][2] == 0.0);
    CHECK(csv.rows[i][3] == 0.0);
  }
}

TEST_CASE("k0 subcommand") {
  RunResult r = run_cli("k0 --kind trig --B 4 --theta 0.3141592653589793 --mu 1");
  REQUIRE(r.exit_code == 0);
  Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 1);
  CHECK(std::abs(csv.rows[0][0] - 5.5297482505310380) < 1e-8);
  CHECK(std::abs(csv.rows[0][1]) < 1e-10);
  CHECK(csv.rows[0][2] == 0.0);

  RunResult degenerate = run_cli("k0 --kind trig --B 4 --theta 0 --mu 1");
  REQUIRE(degenerate.exit_code == 0);
  CHECK(parse_csv(degenerate.out).rows[0][2] == 1.0);

  RunResult wrong = run_cli("k0 --kind constant --B 1 --theta 0.1");
  CHECK(wrong.exit_code == 1);
}

TEST_CASE("verify subcommand reports and exits cleanly") {
  RunResult r = run_cli("verify --kind exp --B 1 --theta 0.3141593 --mu 1 --k 6 "
                        "--oracle-points 1001 --levels 3");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("max_residual") != std::string::npos);

  // inadmissible parameters are a validation error, not a verification one
  RunResult bad = run_cli("verify --kind exp --B 1 --theta 2.5 --mu 1 --k 6");
  CHECK(bad.exit_code == 1);
}
