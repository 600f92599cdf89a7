#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "signsum/io.hpp"

using namespace signsum;

namespace {

const std::string kCli = SIGNSUM_CLI_PATH;
const std::filesystem::path kFixtures = SIGNSUM_FIXTURE_DIR;
const std::filesystem::path kTmp = std::filesystem::temp_directory_path() / "signsum_test_cli";

int run(const std::string& args) {
  const std::string cmd = "\"" + kCli + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp(const std::string& name) {
  std::filesystem::create_directories(kTmp);
  return (kTmp / name).string();
}

std::string fixture(const std::string& name) { return "\"" + (kFixtures / name).string() + "\""; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("c-table") == 2);
  CHECK(run("c-table --n-max 0") == 2);
  CHECK(run("signed-sum --input /nonexistent.json") == 2);
  CHECK(run("signed-sum --input " + fixture("rhombus_pair_equal.json")) == 2);
  CHECK(run("verify --suite nope") == 2);
  CHECK(run("verify --count 0") == 2);
  CHECK(run("optimize --n 3 --d 5") == 2);
  CHECK(run("optimize --d 3 --n 40 --k 20") == 2);
  CHECK(run("optimize --n 3 --format xml") == 2);
  CHECK(run("--help") == 0);
}

TEST_CASE("signed-sum") {
  const std::string out = tmp("hex.json");
  REQUIRE(run("signed-sum --method both --input " + fixture("hexagonal_generators.json") +
              " --out " + out) == 0);
  const json j = read_json_file(out);
  CHECK(j.at("result").at("value").get<double>() == doctest::Approx(2.0));
  CHECK(j.at("agreement").get<bool>());
  CHECK(j.at("equality").get<bool>());
  CHECK(j.at("manifest").at("command") == "signed-sum");

  std::ofstream(tmp("space.json")) << R"({"generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})";
  CHECK(run("signed-sum --method sweep --input " + tmp("space.json")) == 2);
  const std::string out3 = tmp("space_out.json");
  REQUIRE(run("signed-sum --method brute --input " + tmp("space.json") + " --out " + out3) == 0);
  CHECK(read_json_file(out3).at("result").at("value").get<double>() == doctest::Approx(std::sqrt(3.0)));

  std::ofstream(tmp("broken.json")) << "{\"generators\": [[1, 0], ";
  CHECK(run("signed-sum --input " + tmp("broken.json")) == 2);
}

TEST_CASE("c-table") {
  const std::string out = tmp("table.csv");
  REQUIRE(run("c-table --n-max 4 --out " + out) == 0);
  const std::string csv = slurp(out);
  CHECK(csv.rfind("n,c_2nn,ratio,gap_to_2_over_pi\n", 0) == 0);
  CHECK(csv.find("\n3,2,") != std::string::npos);
  const std::string js = tmp("table.json");
  REQUIRE(run("c-table --n-max 4 --format json --out " + js) == 0);
  CHECK(read_json_file(js).at("rows").size() == 4);
}

TEST_CASE("verify") {
  const std::string out = tmp("verify.json");
  REQUIRE(run("verify --suite zonotope --count 20 --seed 5 --out " + out) == 0);
  const json j = read_json_file(out);
  CHECK(j.at("violations").get<int>() == 0);
  CHECK(j.at("manifest").at("seed").get<int>() == 5);
  CHECK(run("verify --suite dowker --count 10 --format csv --out " + tmp("verify.csv")) == 0);
  CHECK(slurp(tmp("verify.csv")).rfind("context,lhs,rhs,slack,equality\n", 0) == 0);
}

TEST_CASE("verify reports violations with exit 3") {
  // Fixture directory where the "perturbed" hexagon is exactly regular.
  const auto dir = kTmp / "bad_fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& e : std::filesystem::directory_iterator(kFixtures)) {
    std::filesystem::copy_file(e.path(), dir / e.path().filename(),
                               std::filesystem::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "perturbed_hexagon.json")
      << R"({"vertices": [[1, 0], [0.5, 0.8660254037844386], [-0.5, 0.8660254037844386],
                         [-1, 0], [-0.5, -0.8660254037844386], [0.5, -0.8660254037844386]]})";
  CHECK(run("verify --suite dowker --count 5 --fixtures \"" + dir.string() + "\"") == 3);
}

TEST_CASE("optimize and replay") {
  const std::string out = tmp("opt.json");
  REQUIRE(run("optimize --n 3 --restarts 4 --seed 9 --out " + out) == 0);
  const json j = read_json_file(out);
  CHECK(j.at("estimate").at("best_value").get<double>() == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(j.at("sandwich").at("holds").get<bool>());

  std::ofstream(tmp("settings.json")) << R"({"restarts": 3, "seed": 4})";
  const std::string out2 = tmp("opt2.json");
  REQUIRE(run("optimize --d 3 --n 3 --settings " + tmp("settings.json") + " --out " + out2) == 0);
  CHECK(read_json_file(out2).at("estimate").at("restarts_used").get<int>() == 3);

  const std::string again = tmp("opt_replay.json");
  REQUIRE(run("replay --input " + out + " --out " + again) == 0);
  const json r = read_json_file(again);
  CHECK(r.at("estimate").at("best_value") == j.at("estimate").at("best_value"));
  CHECK(r.at("estimate").at("best_config") == j.at("estimate").at("best_config"));
  CHECK(run("replay --input " + fixture("rhombus_pair_equal.json")) == 2);
}
