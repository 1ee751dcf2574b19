#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks of the command-line tool: exit codes, artifact layout,
// golden files, and the documented example invocations. DRESSED_CLI_PATH and
// DRESSED_GOLDEN_DIR come from the build.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string capture = "cli_capture_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(DRESSED_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(capture);
  std::remove(capture.c_str());
  return result;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

// CSV payload -> data rows (metadata and header lines skipped)
std::vector<std::vector<std::string>> data_rows(const std::string& payload) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(payload);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column names
      continue;
    }
    rows.push_back(split(line, ','));
  }
  return rows;
}

bool has_line(const std::string& payload, const std::string& wanted) {
  std::istringstream in(payload);
  std::string line;
  while (std::getline(in, line))
    if (line == wanted) return true;
  return false;
}

}  // namespace

TEST_CASE("cli exit codes follow the usage contract") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("spectrum --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);              // a subcommand is required
  CHECK(run_cli("spectrum --bogus 1").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("spectrum --format yaml").exit_code == 2);
  CHECK(run_cli("spectrum --xi-count 1").exit_code == 2);
  CHECK(run_cli("spectrum --xi-start 2 --xi-stop 1").exit_code == 2);
  CHECK(run_cli("spectrum --xi-start -1").exit_code == 2);
  CHECK(run_cli("spectrum --g-over-j -0.5").exit_code == 2);
  CHECK(run_cli("rabi --g -1").exit_code == 2);
  CHECK(run_cli("evolve --t-start -1 --t-stop 1").exit_code == 2);
  CHECK(run_cli("crossings --n-first 5 --n-last 2").exit_code == 2);
  CHECK(run_cli("crossings --n-first -1").exit_code == 2);
  CHECK(run_cli("--config no_such_config.ini rabi").exit_code == 2);
  CHECK(run_cli("rabi --out no_such_dir_here/out.csv").exit_code == 3);
  CHECK(run_cli("rabi").exit_code == 0);
}

TEST_CASE("spectrum artifact matches the golden file byte for byte") {
  const std::string golden =
      read_file(std::string(DRESSED_GOLDEN_DIR) + "/spectrum_default.csv");
  REQUIRE(run_cli("spectrum --out cli_spectrum.csv").exit_code == 0);
  CHECK(read_file("cli_spectrum.csv") == golden);

  // a second run and a threaded run emit the identical bytes
  REQUIRE(run_cli("spectrum --threads 5 --out cli_spectrum_t5.csv").exit_code ==
          0);
  CHECK(read_file("cli_spectrum_t5.csv") == golden);
  REQUIRE(run_cli("spectrum --threads 13 --out cli_spectrum_t13.csv")
              .exit_code == 0);
  CHECK(read_file("cli_spectrum_t13.csv") == golden);
  std::remove("cli_spectrum.csv");
  std::remove("cli_spectrum_t5.csv");
  std::remove("cli_spectrum_t13.csv");
}

TEST_CASE("crossings artifact matches the golden file byte for byte") {
  const std::string golden =
      read_file(std::string(DRESSED_GOLDEN_DIR) + "/crossings_default.csv");
  REQUIRE(run_cli("crossings --out cli_crossings.csv").exit_code == 0);
  CHECK(read_file("cli_crossings.csv") == golden);
  REQUIRE(run_cli("crossings --out cli_crossings2.csv").exit_code == 0);
  CHECK(read_file("cli_crossings2.csv") == golden);
  std::remove("cli_crossings.csv");
  std::remove("cli_crossings2.csv");
}

TEST_CASE("spectrum metadata echoes inputs but not plumbing flags") {
  const CliResult r = run_cli("spectrum --threads 3 --xi-count 4");
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.output, "# command=spectrum"));
  CHECK(has_line(r.output, "# g_over_J=0.5"));
  CHECK(has_line(r.output, "# xi_count=4"));
  CHECK(has_line(r.output, "# levels=2"));
  CHECK(has_line(r.output, "xi,branch,n,E_over_J"));
  CHECK(r.output.find("threads") == std::string::npos);
  CHECK(r.output.find("format") == std::string::npos);
  CHECK(r.output.find("out=") == std::string::npos);
}

TEST_CASE("decoupled sweep rows are straight lines in xi") {
  const CliResult r = run_cli(
      "spectrum --g-over-j 0 --xi-start 0.5 --xi-stop 3.5 --xi-count 7 "
      "--levels 3");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 7 * 4 * 4);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 4);
    const double xi = std::stod(row[0]);
    const std::string& branch = row[1];
    const int n = std::stoi(row[2]);
    const double e = std::stod(row[3]);
    double expected = 0.0;
    if (branch == "+")
      expected = n * xi + 1.0;
    else if (branch == "-")
      expected = n * xi - 1.0;
    else if (branch == "0")
      expected = n == 0 ? 1.0 - xi : n * xi + 1.0;
    else
      expected = n * xi - 1.0;
    CHECK(std::abs(e - expected) <= 1e-9);
  }
}

TEST_CASE("weak-coupling sweep keeps the plus-zero gap below 0.004 J") {
  const CliResult r = run_cli(
      "spectrum --g-over-j 0.05 --xi-start 1 --xi-stop 1.0001 --xi-count 2 "
      "--levels 1");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  double plus1 = 0.0, zero1 = 0.0;
  for (const auto& row : rows) {
    if (row[0] != "1") continue;
    if (row[2] == "1" && row[1] == "+") plus1 = std::stod(row[3]);
    if (row[2] == "1" && row[1] == "0") zero1 = std::stod(row[3]);
  }
  const double gap = plus1 - zero1;  // nu_1 - 1 in units of J
  CHECK(gap > 0.0);
  CHECK(gap <= 0.004);
}

TEST_CASE("tiny-coupling crossings all sit at xi0 within 1e-8") {
  const CliResult r = run_cli("crossings --g-over-j 0.0001 --n-last 18");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 19);
  const double xi0 = 1e-8;  // (g/J)^2
  double prev = xi0;
  for (const auto& row : rows) {
    const double xi_star = std::stod(row[2]);
    CHECK(std::abs(xi_star - xi0) <= 1e-8);
    CHECK(xi_star > 0.0);
    // below xi0 and non-increasing; at this coupling adjacent crossings can
    // land on the same double, so strict decrease is not demanded
    CHECK(xi_star <= prev);
    prev = xi_star;
  }
}

TEST_CASE("rabi row carries the frozen doublet splitting") {
  const CliResult r = run_cli("rabi");
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.output, "J,g,splitting_GHz"));
  CHECK(has_line(r.output, "4,2,0.472135955"));
}

TEST_CASE("json format mirrors the csv content") {
  const CliResult r = run_cli("rabi --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"command\": \"rabi\"") != std::string::npos);
  CHECK(r.output.find("\"splitting_GHz\"") != std::string::npos);
  CHECK(r.output.find("\"0.472135955\"") != std::string::npos);
  CHECK(r.output.back() == '\n');
}

TEST_CASE("phase sweep labels the three regions along the resonant line") {
  const CliResult r = run_cli(
      "phase --j 2 --g 0.1 --xi-start 0.001 --xi-stop 3.5 --xi-count 2");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "I");
  CHECK(rows[0][2] == "none");
  CHECK(rows[0][3] == "nan");
  CHECK(rows[0][4] == "1");
  CHECK(rows[1][1] == "III");
  CHECK(std::stod(rows[1][3]) == doctest::Approx(1.0 - 3.5).epsilon(1e-12));
  CHECK(has_line(r.output, "# xi0=0.0025"));
  CHECK(has_line(r.output, "# xi1=2.00124921973"));
}

TEST_CASE("verify passes on the default model and reports per-block rows") {
  const CliResult r = run_cli("verify");
  REQUIRE(r.exit_code == 0);
  CHECK(has_line(r.output, "# result=PASS"));
  CHECK(has_line(r.output, "# seed=12345"));
  CHECK(has_line(r.output, "block,kind,size,max_energy_dev,max_overlap_dev"));
  const auto rows = data_rows(r.output);
  // singlet chain + W0..W42 for n_max = 40
  REQUIRE(rows.size() == 1 + 43);
  CHECK(rows[0][0] == "singlet_chain");
  CHECK(rows[0][2] == "41");
  CHECK(rows[1][0] == "W0");
  CHECK(rows.back()[0] == "W42");
  CHECK(rows.back()[1] == "truncated");
  for (const auto& row : rows) {
    CHECK(std::stod(row[3]) <= 1e-9);
    CHECK(std::stod(row[4]) <= 1e-9);
  }
}

TEST_CASE("verify honors the seed environment override") {
  const CliResult r = run_cli("verify --g 0.3 --n-max 12");
  REQUIRE(r.exit_code == 0);
  const std::string cmd = "DRESSED_SEED=777 " + std::string(DRESSED_CLI_PATH) +
                          " verify --g 0.3 --n-max 12 > cli_seed.txt 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  const std::string seeded = read_file("cli_seed.txt");
  std::remove("cli_seed.txt");
  CHECK(has_line(seeded, "# seed=777"));
  CHECK(has_line(seeded, "# result=PASS"));
}

TEST_CASE("evolve conserves the singlet population and the kick empties it") {
  const CliResult quiet = run_cli("evolve --t-stop 20 --t-count 9");
  REQUIRE(quiet.exit_code == 0);
  CHECK(has_line(quiet.output, "t,singlet_population,norm"));
  for (const auto& row : data_rows(quiet.output)) {
    CHECK(std::stod(row[1]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::stod(row[2]) == doctest::Approx(1.0).epsilon(1e-9));
  }
  const CliResult kicked = run_cli("evolve --t-stop 20 --t-count 9 --kick");
  REQUIRE(kicked.exit_code == 0);
  CHECK(has_line(kicked.output, "# kick=true"));
  for (const auto& row : data_rows(kicked.output)) {
    CHECK(std::stod(row[1]) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::stod(row[2]) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("device with no mutual capacitance decouples the qubits") {
  const CliResult r = run_cli("device --c-m 0");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == "0");  // J
  CHECK(std::stod(rows[0][1]) > 0.0);
}

TEST_CASE("damping emits both the quoted and golden-rule ratios") {
  const CliResult r = run_cli("damping --omega 12 --omega-a 12");
  REQUIRE(r.exit_code == 0);
  const auto rows = data_rows(r.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][0] == "ok");
  CHECK(std::stod(rows[0][1]) == doctest::Approx(0.05278640450004206).epsilon(1e-12));
  CHECK(std::stod(rows[0][2]) == doctest::Approx(0.947213595499958).epsilon(1e-12));
  const CliResult forbidden = run_cli("damping --g1 1 --g2 1");
  REQUIRE(forbidden.exit_code == 0);
  CHECK(data_rows(forbidden.output)[0][0] == "forbidden");
}

TEST_CASE("config file supplies defaults that flags still override") {
  {
    std::ofstream ini("cli_config.ini");
    ini << "[rabi]\nj=2\ng=1\n";
  }
  const CliResult from_config = run_cli("rabi --config cli_config.ini");
  REQUIRE(from_config.exit_code == 0);
  CHECK(has_line(from_config.output, "J,g,splitting_GHz"));
  CHECK(has_line(from_config.output, "2,1,0.2360679775"));

  const CliResult overridden = run_cli("--config cli_config.ini rabi --g 3");
  REQUIRE(overridden.exit_code == 0);
  CHECK(has_line(overridden.output, "2,3,1.60555127546"));
  std::remove("cli_config.ini");
}
