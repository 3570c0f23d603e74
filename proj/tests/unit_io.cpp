#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "convexdom/report_io.hpp"
#include "doctest.h"

using namespace convexdom;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("convexdom_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr,
            std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("grid csv has the documented header and one row per point") {
  const DiskGrid grid = DiskGrid::uniform(0.9, 4, 8);
  const DominantField q = build_q1(ParamSet{}, make_janowski(1.0, -1.0), grid);
  std::ostringstream s;
  write_grid_csv(q, s);
  std::istringstream in(s.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,theta,re_q,im_q,re_dq,im_dq,re_ddq,im_ddq");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
  }
  CHECK(rows == grid.size());
}

TEST_CASE("report json reflects check status") {
  VerificationReport r;
  r.suite = "demo";
  r.expect_below("small", 1e-9, 1e-6);
  Json j = report_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["checks"][0]["status"] == "pass");
  r.expect_above("positive", -1.0, 0.0);
  j = report_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][1]["status"] == "fail");
  r.convexity_margin_q = std::nan("");
  CHECK(report_json(r)["convexity_margin_q"].is_null());
}

TEST_CASE("bound json carries lambda and zeta") {
  const BoundReport b = bound_report(ParamSet{}, make_janowski(1.0, -1.0), false);
  const Json j = bound_json(b);
  CHECK(j["case_id"] == 1);
  CHECK(std::abs(j["zeta"].get<double>() - (2.0 * std::log(2.0) - 1.0)) < 1e-12);
  CHECK(j["xi"].is_null());
  CHECK(j["min_location"].is_null());
}

TEST_CASE("cli dominant writes csv and diagnostics") {
  const auto dir = scratch_dir("dominant");
  const int code = run_cli({"dominant", "--rings", "8", "--thetas", "32", "--out", dir.string()});
  CHECK(code == cli::kExitPass);
  CHECK(std::filesystem::exists(dir / "q_grid.csv"));
  CHECK(std::filesystem::exists(dir / "H_grid.csv"));
  const Json j = Json::parse(slurp(dir / "dominant.json"));
  CHECK(j["report"]["passed"] == true);
  CHECK(j["report"]["convexity_margin_q"].get<double>() > 0.0);
  CHECK(j["q"]["a0"][0] == 1.0);
}

TEST_CASE("cli rejects inadmissible parameters with exit 2 and lists each violation") {
  std::string err;
  CHECK(run_cli({"dominant", "--A", "0.2", "--B", "0.5"}, nullptr, &err) == cli::kExitValidation);
  CHECK(err.find("-1 <= B < A <= 1") != std::string::npos);

  CHECK(run_cli({"dominant", "--operator", "psi3"}) == cli::kExitValidation);
  CHECK(run_cli({"verify", "--suite", "nothing"}) == cli::kExitValidation);
  CHECK(run_cli({"bound", "--target", "nowhere"}) == cli::kExitValidation);
}

TEST_CASE("cli bound reproduces the half-plane constant") {
  const auto dir = scratch_dir("bound");
  std::string out;
  CHECK(run_cli({"bound", "--out", dir.string()}, &out) == cli::kExitPass);
  const Json j = Json::parse(slurp(dir / "bound.json"));
  CHECK(std::abs(j["zeta"].get<double>() - (2.0 * std::log(2.0) - 1.0)) < 1e-10);

  CHECK(run_cli({"bound", "--target", "sqrt", "--out", dir.string()}) == cli::kExitPass);
  CHECK(std::abs(Json::parse(slurp(dir / "bound.json"))["lambda"].get<double>() - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("config file values are overridden by flags") {
  const auto dir = scratch_dir("config");
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "run.ini");
    f << "target = \"exp\"\nalpha = 0.25\nrings = 6\nthetas = 24\n";
  }
  const std::string cfg = (dir / "run.ini").string();
  REQUIRE(run_cli({"--config", cfg, "dominant", "--alpha", "0", "--out", dir.string()}) ==
          cli::kExitPass);
  const Json j = Json::parse(slurp(dir / "dominant.json"));
  CHECK(j["target"]["label"] == "exp");
  CHECK(j["params"]["alpha"] == 0.0);
  CHECK(j["q"]["grid"]["rings"] == 6);
}

TEST_CASE("verify reports are byte-identical for a fixed seed") {
  const auto a = scratch_dir("det_a");
  const auto b = scratch_dir("det_b");
  for (const auto& dir : {a, b}) {
    CHECK(run_cli({"verify", "--suite", "exactness", "--samples", "20", "--seed", "11", "--out",
                   dir.string()}) == cli::kExitPass);
  }
  const std::string ja = slurp(a / "verify_exactness.json");
  CHECK(!ja.empty());
  CHECK(ja == slurp(b / "verify_exactness.json"));
}

TEST_CASE("exit code follows the report") {
  const auto dir = scratch_dir("univalence");
  CHECK(run_cli({"verify", "--suite", "univalence", "--samples", "3", "--rings", "8", "--thetas",
                 "24", "--out", dir.string()}) == cli::kExitPass);
  const Json j = Json::parse(slurp(dir / "verify_univalence.json"));
  bool all_pass = true;
  for (const auto& c : j["checks"]) all_pass = all_pass && c["status"] == "pass";
  CHECK(all_pass == j["passed"].get<bool>());
}
