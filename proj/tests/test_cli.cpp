#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef STARQ_CLI_PATH
#error "STARQ_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(STARQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) row.push_back(field);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("constants") {
  const RunResult r = run_cli("constants --alpha 0.5");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][1] == "q_min");
  CHECK(std::stod(rows[1][1]) == doctest::Approx(0.721348).epsilon(1e-5));
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.357865).epsilon(1e-5));
  CHECK(std::stod(rows[1][4]) == doctest::Approx(0.246646).epsilon(1e-5));
  CHECK(std::stod(rows[1][5]) == doctest::Approx(0.546407).epsilon(1e-5));
}

TEST_CASE("constants accepts fraction alpha") {
  const RunResult r = run_cli("constants --alpha 7/9 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["q_min"]) == doctest::Approx(0.869128).epsilon(1e-5));
}

TEST_CASE("constants at decimal alpha 0.666667") {
  const RunResult r = run_cli("constants --alpha 0.666667 --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(double(nlohmann::json::parse(r.out)["q_min"]) ==
        doctest::Approx(0.807887).epsilon(1e-5));
}

TEST_CASE("constants at alpha 0 reports gamma = 0.5") {
  const RunResult r = run_cli("constants --alpha 0 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["gamma"]) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("radius command") {
  SUBCASE("sl at alpha 0") {
    const RunResult r = run_cli("radius --class sl --alpha 0 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["root"]) == doctest::Approx(0.5680).epsilon(2e-4));
    CHECK(std::abs(double(j["residual"])) <= 1e-12);
  }
  SUBCASE("exp at alpha 0.3 is on the below-threshold branch") {
    const RunResult r = run_cli("radius --class exp --alpha 0.3 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["branch"] == "below");
  }
  SUBCASE("cardioid rejects alpha >= 3/4 with exit code 2") {
    CHECK(run_cli("radius --class cardioid --alpha 0.8").exit_code == 2);
  }
  SUBCASE("cardioid at alpha 0.6 has no root: solver failure exit code 3") {
    CHECK(run_cli("radius --class cardioid --alpha 0.6").exit_code == 3);
  }
  SUBCASE("starlike-order requires gamma") {
    CHECK(run_cli("radius --class starlike-order --alpha 0.3").exit_code == 2);
    CHECK(run_cli("radius --class starlike-order --alpha 0.3 --gamma 0.9").exit_code == 0);
  }
}

TEST_CASE("boundary command") {
  SUBCASE("alpha 0 vertices on the half-plane line") {
    const RunResult r = run_cli("boundary --alpha 0 --samples 1024 --format csv");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 1025);
    for (std::size_t i = 1; i < rows.size(); i += 97) {
      CHECK(std::stod(rows[i][2]) == doctest::Approx(0.5).epsilon(1e-7));
    }
  }
  SUBCASE("json a_min annotation at alpha 0.777778") {
    const RunResult r = run_cli("boundary --alpha 0.777778 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["a_min"]) == doctest::Approx(0.869128).epsilon(1e-4));
  }
  SUBCASE("svg output is a well-formed curve with the annotation") {
    const RunResult r = run_cli("boundary --alpha 0.5 --format svg");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("<svg") == 0);
    CHECK(r.out.find("polyline") != std::string::npos);
    CHECK(r.out.find("A=0.72134752") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);
  }
}

TEST_CASE("bound command") {
  SUBCASE("fekete") {
    const RunResult r = run_cli("bound fekete --alpha 0 --t 1 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(double(nlohmann::json::parse(r.out)["bound"]) == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("a3 at the branch meeting point") {
    const RunResult r = run_cli("bound a3 --alpha 0.75 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(double(nlohmann::json::parse(r.out)["bound"]) == doctest::Approx(0.125).epsilon(1e-9));
  }
  SUBCASE("logcoeff") {
    const RunResult r = run_cli("bound logcoeff --alpha 0 --n 1 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(double(j["bound"]) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_FALSE(bool(j["conditional"]));
  }
  SUBCASE("inverse") {
    const RunResult r = run_cli("bound inverse --alpha 0.375 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(double(nlohmann::json::parse(r.out)["b3"]) == doctest::Approx(0.3125).epsilon(1e-9));
  }
  SUBCASE("unknown kind exits 2") {
    CHECK(run_cli("bound nonsense --alpha 0").exit_code == 2);
  }
}

TEST_CASE("membership command") {
  SUBCASE("identity in sq at alpha 0.3") {
    const RunResult r =
        run_cli("membership --f identity --class sq --alpha 0.3 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "HoldsOnGrid");
    CHECK(double(j["worst_margin"]) == doctest::Approx(0.7).epsilon(1e-9));
  }
  SUBCASE("koebe violates subordination at alpha 0") {
    const RunResult r =
        run_cli("membership --f koebe --class sqalpha --alpha 0 --format json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "Violated");
    CHECK(double(j["witness"]["z"][0]) < -0.8);
  }
  SUBCASE("falpha convex membership") {
    const RunResult r = run_cli(
        "membership --f falpha:0.4 --class convex --alpha 0.4 --format json");
    REQUIRE(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "HoldsOnGrid");
  }
  SUBCASE("unknown function spec exits 2") {
    CHECK(run_cli("membership --f parabola --class sq --alpha 0").exit_code == 2);
  }
}

TEST_CASE("scan command") {
  SUBCASE("gamma table") {
    const RunResult r = run_cli("scan gamma-table --alpha 0:0.9:0.3");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(std::stod(rows[1][1]) == doctest::Approx(0.5).epsilon(1e-9));
  }
  SUBCASE("convexity sign table has both signs") {
    const RunResult r = run_cli("scan convexity --alpha 0:0.9:0.15 --m 1024");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i][3] == "+") has_pos = true;
      if (rows[i][3] == "-") has_neg = true;
    }
    CHECK(has_pos);
    CHECK(has_neg);
  }
  SUBCASE("starlike scan runs and reports the honest minima") {
    const RunResult r = run_cli("scan starlike --alpha 0:0.9:0.3 --m 1024");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(std::stod(rows[1][1]) > 0.0);   // alpha = 0
    CHECK(std::stod(rows[2][1]) < 0.0);   // alpha = 0.3, negative near the window
    CHECK(std::stod(rows[4][1]) > 0.0);   // alpha = 0.9
  }
  SUBCASE("radius table roots decrease for sin") {
    const RunResult r = run_cli("scan radius-table --class sin --alpha 0:0.9:0.1");
    REQUIRE(r.exit_code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() >= 10);
    double prev = 1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double root = std::stod(rows[i][2]);
      CHECK(root < prev);
      prev = root;
    }
  }
}

TEST_CASE("byte-identical reruns") {
  for (const std::string cmd :
       {std::string("constants --alpha 0.3 --format json"),
        std::string("boundary --alpha 0.4 --samples 300 --format csv"),
        std::string("radius --class sg --alpha 0.2")}) {
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("output file writing and io failure") {
  const RunResult ok = run_cli("constants --alpha 0.2 --output /tmp/starq_test_out.csv");
  CHECK(ok.exit_code == 0);
  std::remove("/tmp/starq_test_out.csv");
  const RunResult bad =
      run_cli("constants --alpha 0.2 --output /nonexistent_dir/x.csv");
  CHECK(bad.exit_code == 4);
}

TEST_CASE("invalid alpha exits 2") {
  CHECK(run_cli("constants --alpha 1.2").exit_code == 2);
  CHECK(run_cli("constants --alpha -0.1").exit_code == 2);
  CHECK(run_cli("constants --alpha nonsense").exit_code == 2);
}

TEST_CASE("boundary rejects too few samples") {
  CHECK(run_cli("boundary --alpha 0.3 --samples 100").exit_code == 2);
}

TEST_CASE("STARQ_GRID_M overrides the angular sample count") {
  const std::string cmd = std::string("STARQ_GRID_M=128 ") + STARQ_CLI_PATH +
                          " membership --f identity --class sq --alpha 0 "
                          "--format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
  const auto j = nlohmann::json::parse(out);
  CHECK(j["grid"]["angular_count"] == 128);
}
