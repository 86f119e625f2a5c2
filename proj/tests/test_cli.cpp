#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "witkit/hakye.hpp"
#include "witkit/io.hpp"
#include "witkit/states.hpp"

using namespace witkit;
namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "witkit_test_cli";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const fs::path out = workdir() / "stdout.txt";
  const std::string cmd = env + " " + WITKIT_CLI_PATH + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli analyze on the reference instance") {
  const fs::path op = workdir() / "hk.json";
  const Run save = run("hakye --reproducible --save-operator " + op.string());
  REQUIRE(save.code == 0);
  CHECK(save.out.find(",violation,") != std::string::npos);

  const Run r = run("analyze --json " + op.string());
  CHECK(r.code == 3);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["gap"].get<double>() - 0.0846) <= 2e-3);
  CHECK(j["condition_holds"] == true);
  CHECK(j["npt_side"] == "W");
  CHECK(j["conclusion"] == "INCONCLUSIVE");

  const Run asserted = run("analyze --json --assert-onew " + op.string());
  CHECK(asserted.code == 3);
  CHECK(nlohmann::json::parse(asserted.out)["conclusion"] == "VIOLATES");
}

TEST_CASE("cli analyze exit codes") {
  const fs::path pos = workdir() / "pos.json";
  save_operator(HermitianOperator::identity(Dims(2, 2)), pos);
  CHECK(run("analyze " + pos.string()).code == 1);

  const fs::path sym = workdir() / "sym.json";
  save_operator(HermitianOperator::diagonal(Dims(2, 2), {-1, 1, 1, 1}), sym);
  CHECK(run("analyze " + sym.string()).code == 0);

  CHECK(run("analyze " + (workdir() / "missing.json").string()).code == 1);
  CHECK(run("hakye --scan bogus").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("cli hakye single point equals N=1 scan") {
  const Run single = run("hakye --a 1.2879 --b 0.6440 --c 0 --theta 0.2618 --reproducible");
  REQUIRE(single.code == 0);
  CHECK(single.out.find(",violation,") != std::string::npos);
  const Run grid = run("hakye --a 1.2879 --b 0.6440 --c 0 --scan theta=0.2618:9:1 --reproducible");
  CHECK(grid.out == single.out);
  const Run js = run("hakye --format json --reproducible");
  const auto j = nlohmann::json::parse(js.out);
  REQUIRE(j.is_array());
  CHECK(j[0]["verdict"] == "violation");
  CHECK(j[0]["schema_version"] == 1);
}

TEST_CASE("cli cmax") {
  const fs::path tau4 = workdir() / "tau4.json";
  const fs::path tau9 = workdir() / "tau9.json";
  save_operator(maximally_mixed(Dims(2, 2)).op(), tau4);
  save_operator(maximally_mixed(Dims(3, 3)).op(), tau9);
  const Run r4 = run("cmax --json " + tau4.string());
  CHECK(r4.code == 0);
  CHECK(std::abs(nlohmann::json::parse(r4.out)["value"].get<double>() - 0.25) <= 1e-15);
  const Run r9 = run("cmax --json " + tau9.string());
  CHECK(std::abs(nlohmann::json::parse(r9.out)["value"].get<double>() - 1.0 / 9) <= 1e-15);

  const fs::path not_density = workdir() / "nd.json";
  save_operator(HermitianOperator::identity(Dims(2, 2)), not_density);
  CHECK(run("cmax " + not_density.string()).code == 1);

  const fs::path rnd = workdir() / "rnd.json";
  save_operator(random_density(Dims(2, 3), 5).op(), rnd);
  const Run a = run("cmax --seed 7 " + rnd.string(), "SPA_WITNESS_THREADS=1");
  const Run b = run("cmax --seed 7 " + rnd.string(), "SPA_WITNESS_THREADS=3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  // one iteration cannot reach tolerance 0 on a generic state
  CHECK(run("cmax --max-iter 1 --tol 0 " + rnd.string()).code == 2);
}

TEST_CASE("cli geometry") {
  const fs::path op = workdir() / "hk_geo.json";
  save_operator(hakye_witness(HaKyeParams::reference_instance()), op);
  const fs::path out = workdir() / "geo.csv";
  const Run r = run("geometry --samples 50 --seed 2 --reproducible --out " + out.string() + " " + op.string());
  CHECK(r.code == 0);
  const std::string csv = read_file(out);
  CHECK(csv.find("ground-projector,0,") != std::string::npos);
  CHECK(csv.find("negative-side") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 2 + 101);
  const Run timestamped = run("geometry --samples 1 " + op.string());
  CHECK(timestamped.out.find("# generated=") != std::string::npos);
}
