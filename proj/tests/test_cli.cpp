#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef AVOGRIP_CLI_PATH
#error "AVOGRIP_CLI_PATH must be defined"
#endif

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(AVOGRIP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("avogrip_cli_" + name)).string();
}

}  // namespace

TEST_CASE("mech prints the reference moment") {
  const Run r = run("mech --geom reference --torque 1.0 --alpha-deg 60");
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["total_moment_nm"].get<double>() == 0.333333);
  const Run zero = run("mech --torque 0 --alpha-deg 60");
  REQUIRE(zero.code == 0);
  CHECK(json_of(zero)["total_moment_nm"].get<double>() == 0.0);
}

TEST_CASE("exit code contract") {
  CHECK(run("mech --torque 1.0 --alpha-deg 150").code == 2);
  CHECK(run("mech --torque -1.0 --alpha-deg 60").code == 2);
  CHECK(run("mech --alpha-deg 60").code == 64);
  CHECK(run("frobnicate").code == 64);
  CHECK(run("").code == 64);
  CHECK(run("sweep --step-deg 0").code == 64);
  CHECK(run("stats --forces /nonexistent/forces.csv").code == 66);
  CHECK(run("mech --geom /nonexistent/g.json --torque 1 --alpha-deg 60").code == 66);
  CHECK(run("size-motor --height-mm 10").code == 64);
  CHECK(run("size-motor --geom reference").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("sweep agrees with mech at 60 degrees") {
  const Run sweep = run("sweep --geom reference --torque 1.0");
  REQUIRE(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "alpha_deg,d_m,theta_deg,aperture_m,moment_nm");
  std::string row60;
  double prev_alpha = -1.0, prev_ap = -1.0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string a, d, th, ap, m;
    std::getline(cells, a, ',');
    std::getline(cells, d, ',');
    std::getline(cells, th, ',');
    std::getline(cells, ap, ',');
    std::getline(cells, m, ',');
    CHECK(std::stod(a) > prev_alpha);
    CHECK(std::stod(ap) > prev_ap);
    prev_alpha = std::stod(a);
    prev_ap = std::stod(ap);
    if (a == "60") row60 = line;
  }
  REQUIRE_FALSE(row60.empty());
  const auto mech = json_of(run("mech --geom reference --torque 1.0 --alpha-deg 60"));
  std::ostringstream expect;
  expect << "60," << mech["configuration"]["d_m"].dump() << "," << mech["configuration"]["theta_deg"].dump()
         << "," << mech["aperture_m"].dump() << "," << mech["total_moment_nm"].dump();
  CHECK(row60 == expect.str());
}

TEST_CASE("sweep writes an SVG plot") {
  const std::string svg = temp_path("sweep.svg");
  std::filesystem::remove(svg);
  REQUIRE(run("sweep --plot " + svg + " --output " + temp_path("sweep.csv")).code == 0);
  std::ifstream in(svg);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("<polyline") != std::string::npos);
}

TEST_CASE("stats over the bundled fixtures") {
  const Run r = run("stats");
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  CHECK(doc["detachment_forces"][1]["viewpoint"] == "CV");
  CHECK(doc["detachment_forces"][1]["mean_force_n"].get<double>() == 9.6);
  CHECK(doc["rotation"]["ratios"][2]["group"] == "Large");
  CHECK(doc["rotation"]["ratios"][2]["cv_over_fv"].get<double>() == 0.714);
  const Run csv = run("stats --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("detachment_forces[1].mean_force_n,9.6\n") != std::string::npos);
}

TEST_CASE("AVOGRIP_DATA_DIR overrides the fixture location") {
  const auto dir = std::filesystem::temp_directory_path() / "avogrip_cli_data";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "detachment_forces.csv") << "sample_no,viewpoint,force_n,b_mm,h_mm\n1,CV,4.5,50,60\n";
  const Run r = run("stats --trials none", "AVOGRIP_DATA_DIR=" + dir.string());
  REQUIRE(r.code == 0);
  CHECK(json_of(r)["detachment_forces"][0]["mean_force_n"].get<double>() == 4.5);
  CHECK(run("stats", "AVOGRIP_DATA_DIR=/nonexistent").code == 66);
}

TEST_CASE("size-motor scales with the safety factor") {
  const Run one = run("size-motor --safety 1.0");
  const Run two = run("size-motor --safety 2.0");
  REQUIRE(one.code == 0);
  REQUIRE(two.code == 0);
  const double t1 = json_of(one)["rated_torque_nm"].get<double>();
  const double t2 = json_of(two)["rated_torque_nm"].get<double>();
  CHECK(t2 == doctest::Approx(2.0 * t1).epsilon(1e-6));
}

TEST_CASE("simulate consumes a size-motor report") {
  const std::string motor = temp_path("motor.json");
  REQUIRE(run("size-motor --geom harvest --output " + motor).code == 0);
  const Run r = run("simulate --trials bundled --geom harvest --motor " + motor);
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  CHECK(doc["summary"]["success_rate"].get<double>() == 1.0);
  CHECK(doc["trials"].size() == 30);
  CHECK(doc["metadata"]["staging_pose"][3].get<double>() == 90.1);
  const Run csv = run("simulate --format csv --motor " + motor);
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("sample_no,group,viewpoint,success", 0) == 0);
}

TEST_CASE("suction defaults reproduce the tube figure") {
  const Run r = run("suction --diameter-mm 16.8 --vacuum-pa 5");
  REQUIRE(r.code == 0);
  const auto doc = json_of(r);
  CHECK(std::abs(doc["suction_force_n"].get<double>() - 22.460) < 0.005);
  CHECK(doc["matches_reference"].get<bool>() == false);
  CHECK(run("suction --vacuum-pa 200000").code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  for (const char* args : {"mech --torque 1.5 --alpha-deg 42", "sweep --step-deg 1", "stats",
                           "size-motor", "simulate --threads 4", "suction"}) {
    const Run a = run(args);
    const Run b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("simulate --threads 1").out == run("simulate --threads 5").out);
}
