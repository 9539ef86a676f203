#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rs3/cli.hpp"

using namespace rs3;

namespace {

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(RS3_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("bounds command") {
  auto csv = run_cli({"bounds", "--n-min", "3", "--n-max", "6", "--format", "csv"});
  CHECK(csv.exit_code == 0);
  CHECK(count_lines(csv.out) == 5);  // header + 4 rows
  CHECK(csv.out.find("1.6180339887498949") != std::string::npos);

  auto json = run_cli({"bounds", "--n-min", "3", "--n-max", "3", "--format", "json"});
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(json.out.find("-0.333333333333") != std::string::npos);

  auto bad = run_cli({"bounds", "--n-min", "5", "--n-max", "3"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("extremizer command") {
  auto r = run_cli({"extremizer", "--n", "5", "--want", "max", "--route", "compact",
                    "--format", "json"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.6180339887498949") != std::string::npos);
  CHECK(r.out.find("\"case\": \"amax-bmax\"") != std::string::npos);

  auto rs = run_cli({"extremizer", "--n", "4", "--want", "max", "--tau", "1",
                     "--route", "recurrence", "--format", "csv"});
  CHECK(rs.exit_code == 0);
  CHECK(rs.out.find("4,0.5") != std::string::npos);

  auto closed_min = run_cli({"extremizer", "--n", "4", "--want", "min", "--route", "closed"});
  CHECK(closed_min.exit_code == 1);  // no closed form for this case

  // Half-weight scaling of the even part: a_2 = 2 tau y^2 at tau = 1/2.
  auto half = run_cli({"extremizer", "--n", "6", "--want", "min", "--tau", "0.5",
                       "--route", "closed", "--format", "csv"});
  CHECK(half.exit_code == 0);
  double y6 = std::sin(M_PI / 10);
  auto line_value = [&](const std::string& text, const std::string& prefix) {
    auto pos = text.find(prefix);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + prefix.size()));
  };
  CHECK(std::abs(line_value(half.out, "\n2,") - y6 * y6) < 1e-12);
  CHECK(std::abs(line_value(half.out, "\n3,") - (1 - std::sqrt(5.0)) / 2) < 1e-12);

  auto warn = run_cli({"extremizer", "--n", "5", "--want", "max", "--tau", "0.5"});
  CHECK(warn.exit_code == 0);
  CHECK(warn.err.find("ignored") != std::string::npos);

  auto bad_tau = run_cli({"extremizer", "--n", "6", "--want", "max", "--tau", "3"});
  CHECK(bad_tau.exit_code == 1);
}

TEST_CASE("kernel command") {
  auto five = run_cli({"kernel", "--n", "5", "--want", "max", "--samples", "5",
                       "--format", "csv"});
  CHECK(five.exit_code == 0);
  CHECK(count_lines(five.out) == 6);
  // Difference column stays below 1e-9.
  std::istringstream rows(five.out);
  std::string line;
  std::getline(rows, line);
  while (std::getline(rows, line)) {
    double diff = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(diff < 1e-9);
  }

  auto ends = run_cli({"kernel", "--n", "3", "--want", "min", "--samples", "2",
                       "--format", "csv"});
  CHECK(ends.exit_code == 0);
  CHECK(count_lines(ends.out) == 3);
  CHECK(ends.out.find(",0,0,0") != std::string::npos);

  auto family = run_cli({"kernel", "--n", "6", "--want", "min", "--tau", "1",
                         "--samples", "100", "--format", "json"});
  CHECK(family.exit_code == 0);
  std::istringstream doc(family.out);
  while (std::getline(doc, line)) {
    auto pos = line.find("\"im\": ");
    if (pos != std::string::npos) CHECK(std::stod(line.substr(pos + 6)) >= -1e-10);
  }

  auto bad = run_cli({"kernel", "--n", "5", "--want", "max", "--samples", "1"});
  CHECK(bad.exit_code == 1);
}

TEST_CASE("verify command") {
  auto ok = run_cli({"verify", "--n-max", "12", "--format", "json"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"all_pass\": true") != std::string::npos);
  // Range semantics: only degrees 3..n_max appear.
  CHECK(ok.out.find("\"n\": 12") != std::string::npos);
  CHECK(ok.out.find("\"n\": 13") == std::string::npos);

  auto bad = run_cli({"verify", "--n-max", "2"});
  CHECK(bad.exit_code == 1);

  auto usage = run_cli({"verify"});
  CHECK(usage.exit_code == 1);
}

TEST_CASE("identical invocations are byte identical") {
  std::vector<std::string> args{"verify", "--n-max", "5", "--format", "json"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("format can default through the environment") {
  setenv("RS3_FORMAT", "csv", 1);
  auto r = run_cli({"bounds", "--n-min", "3", "--n-max", "3"});
  unsetenv("RS3_FORMAT");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,max_case", 0) == 0);
}

TEST_CASE("golden documents for the small degrees") {
  auto b = run_cli({"bounds", "--n-min", "3", "--n-max", "6", "--format", "json"});
  CHECK(b.out == golden("bounds_3_6.json"));

  auto e5 = run_cli({"extremizer", "--n", "5", "--want", "max", "--route", "closed",
                     "--format", "json"});
  CHECK(e5.out == golden("extremizer_5_max.json"));

  auto e6 = run_cli({"extremizer", "--n", "6", "--want", "min", "--tau", "0.5",
                     "--route", "recurrence", "--format", "json"});
  CHECK(e6.out == golden("extremizer_6_min_tau05.json"));

  auto k4 = run_cli({"kernel", "--n", "4", "--want", "max", "--tau", "1", "--samples",
                     "8", "--format", "csv"});
  CHECK(k4.out == golden("kernel_4_max_s8.csv"));

  auto v4 = run_cli({"verify", "--n-max", "4", "--format", "json"});
  CHECK(v4.out == golden("verify_4.json"));
}
