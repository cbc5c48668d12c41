#include "trigprod/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "trigprod/cache.hpp"
#include "trigprod/coeffs.hpp"
#include "trigprod/errors.hpp"

using namespace trigprod;
using nlohmann::json;

namespace {

struct RunCapture {
  int code;
  std::string out;
  std::string err;
};

RunCapture run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "trigprod-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("theta grammar") {
  const auto rational = cli::parse_theta("2pi/5");
  REQUIRE(std::holds_alternative<PiRational>(rational));
  CHECK(std::get<PiRational>(rational).num == 2);
  CHECK(std::get<PiRational>(rational).den == 5);

  const auto decimal_pi = cli::parse_theta("1.5pi");
  REQUIRE(std::holds_alternative<PiRational>(decimal_pi));
  CHECK(std::get<PiRational>(decimal_pi).num == 15);
  CHECK(std::get<PiRational>(decimal_pi).den == 10);

  const auto plain = cli::parse_theta("0.5");
  REQUIRE(std::holds_alternative<double>(plain));
  CHECK(std::get<double>(plain) == 0.5);

  CHECK(std::get<PiRational>(cli::parse_theta("pi")).num == 1);
  CHECK(std::get<PiRational>(cli::parse_theta("-pi/3")).num == -1);
  CHECK_THROWS_AS(cli::parse_theta("pi5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_theta("2pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_theta("abc"), std::invalid_argument);
}

TEST_CASE("eval subcommand") {
  const RunCapture direct = run_cli({"eval", "P", "--n", "4", "--theta", "2pi/5"});
  REQUIRE(direct.code == 0);
  const json result = json::parse(direct.out);
  CHECK(result["magnitude"].get<double>() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(result["theta_is_pi_rational"].get<bool>());

  const RunCapture zero = run_cli({"eval", "P", "--n", "3", "--theta", "0"});
  REQUIRE(zero.code == 0);
  const json zres = json::parse(zero.out);
  CHECK(zres["zero"].get<bool>());
  CHECK(zres["magnitude"].get<double>() == 0.0);

  CHECK(run_cli({"eval", "X", "--n", "4", "--theta", "1"}).code == 2);
  CHECK(run_cli({"eval", "P", "--n", "4", "--theta", "wat"}).code == 2);
}

TEST_CASE("coeffs subcommand prints CSV rows") {
  const RunCapture q7 = run_cli({"coeffs", "Q", "--n", "7"});
  REQUIRE(q7.code == 0);
  CHECK(q7.out.find("k,coefficient\n") == 0);
  CHECK(q7.out.find("\n9,6\n") != std::string::npos);
}

TEST_CASE("cache round trip and integrity") {
  const auto dir = temp_dir() / "cache";
  std::filesystem::remove_all(dir);

  const RunCapture write = run_cli({"coeffs", "P", "--n", "50", "--cache", dir.string()});
  REQUIRE(write.code == 0);
  const json info = json::parse(write.out);
  CHECK(info["degree"].get<int>() == 1275);

  const CoefficientTable read_back = cache_read(ProductKind::P, 50, dir);
  CHECK(read_back.coeffs == pn_coefficients(50).coeffs);

  // check the Q sum rule through the reader
  cache_write(qn_coefficients(20), dir);
  BigInt sum = 0;
  for (const BigInt& c : cache_read(ProductKind::Q, 20, dir).coeffs) sum += c;
  CHECK(sum == 1048576);

  // tamper with one line: the sum invariant must catch it
  const auto file = dir / cache_file_name(ProductKind::P, 50);
  std::ifstream in(file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::string text = buffer.str();
  const std::size_t pos = text.find("\n0\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 3, "\n7\n");
  std::ofstream(file) << text;
  CHECK_THROWS_AS(cache_read(ProductKind::P, 50, dir), integrity_error);

  // missing table
  CHECK_THROWS(cache_read(ProductKind::Q, 999, dir));
}

TEST_CASE("constants subcommand") {
  const RunCapture result = run_cli({"constants", "--tol", "1e-10"});
  REQUIRE(result.code == 0);
  const json list = json::parse(result.out);
  REQUIRE(list.is_array());
  CHECK(list[0]["name"] == "w0");
  CHECK(list[0]["value"].get<double>() == doctest::Approx(0.7912265710).epsilon(1e-9));
  CHECK(list[0]["paper"] == "0.7912265710");
}

TEST_CASE("norms subcommand") {
  const RunCapture l2 = run_cli({"norms", "P", "--n", "10", "--p", "2"});
  REQUIRE(l2.code == 0);
  CHECK(l2.out.find("n,p,value_log,method,error\n") == 0);
  CHECK(l2.out.find("quadrature") != std::string::npos);

  const RunCapture sup = run_cli({"norms", "P", "--n", "10", "--p", "inf"});
  REQUIRE(sup.code == 0);
  CHECK(sup.out.find("scan-refine") != std::string::npos);

  CHECK(run_cli({"norms", "Q", "--n", "10", "--p", "inf"}).code == 2);
  CHECK(run_cli({"norms", "P", "--n", "10", "--p", "0.3"}).code == 2);
}

TEST_CASE("figure subcommand writes CSV") {
  const auto out_csv = temp_dir() / "fig2-small.csv";
  std::filesystem::remove(out_csv);
  const RunCapture fig = run_cli({"figure", "--id", "2", "--n-max", "12", "--out", out_csv.string()});
  REQUIRE(fig.code == 0);
  std::ifstream in(out_csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,ratio");
  int rows = 0;
  double last = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    last = std::stod(line.substr(line.find(',') + 1));
  }
  CHECK(rows == 12);
  CHECK(last > 0.0);

  CHECK(run_cli({"figure", "--id", "9", "--out", (temp_dir() / "x.csv").string()}).code == 2);
}

TEST_CASE("verify subcommand") {
  const RunCapture one = run_cli({"verify", "--theorem", "littlewood", "--n-max", "50"});
  REQUIRE(one.code == 0);
  const json reports = json::parse(one.out);
  REQUIRE(reports.is_array());
  CHECK(reports[0]["theorem"] == "littlewood");
  CHECK(reports[0]["pass"].get<bool>());

  CHECK(run_cli({"verify", "--theorem", "nope", "--n-max", "50"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
}

TEST_CASE("verify --all at n-max 100 completes without accuracy failures") {
  const RunCapture all = run_cli({"verify", "--all", "--n-max", "100"});
  REQUIRE(all.code == 0);  // 1 would signal an accuracy failure
  const json reports = json::parse(all.out);
  CHECK(reports.size() >= 10);
  for (const auto& report : reports) {
    CHECK(report["pass"].get<bool>());
  }
}

}  // TEST_SUITE
