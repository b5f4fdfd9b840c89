#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dweights/cli.hpp"
#include "dweights/weights.hpp"

using namespace dweights;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> fields(const std::string& line, char sep) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, sep);) v.push_back(f);
  return v;
}

std::vector<std::string> words(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string w; in >> w;) v.push_back(w);
  return v;
}

}  // namespace

TEST_CASE("chebyshev weights table") {
  const auto r = run({"weights", "--model", "chebyshev-mod", "--N", "10"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(words(rows[0]) ==
        std::vector<std::string>{"mu", "energy", "heller", "broad", "jmatrix-interp", "jmatrix-exact", "oracle"});
  const auto row4 = words(rows[5]);
  REQUIRE(row4.size() == 7);
  CHECK(row4[0] == "4");
  CHECK(row4[5] == "0.286976");
}

TEST_CASE("partial-wave weights table") {
  const auto r = run({"weights", "--model", "pwke", "--ell", "1", "--lambda", "1.3", "--N", "5"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(words(rows[0]) == std::vector<std::string>{"mu", "energy", "heller", "jmatrix-interp", "jmatrix-exact", "oracle"});
  CHECK(words(rows[4])[4] == "4.01574624");
  CHECK(words(rows[1])[1] == "0.69089884");
}

TEST_CASE("csv output is deterministic and full precision") {
  const std::vector<std::string> args{"weights", "--format", "csv", "--methods", "heller,jmatrix-exact"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "mu,energy,heller,jmatrix-exact");
  const auto f = fields(rows[1], ',');
  REQUIRE(f.size() == 4);
  CHECK(std::stod(f[1]) == doctest::Approx(-0.952972).epsilon(1e-6));
  // 17 significant digits round-trip the double.
  const Discretization d(ModelProblem::chebyshev_modified(1.0 / 3.0, 1.0 / 3.0), 10);
  CHECK(std::stod(f[3]) == jmatrix_exact_weights(d)[0]);
}

TEST_CASE("zeta curve") {
  const auto r = run({"zeta-curve", "--N", "10", "--grid", "200", "--knots", "drop-last"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "kind,x,zeta,dzeta_dx,dzeta_display,in_fit");
  const Discretization d(ModelProblem::chebyshev_modified(1.0 / 3.0, 1.0 / 3.0), 10);
  const auto interp = jmatrix_interp_weights(d);
  int curve = 0, eigen = 0, tilde = 0, excluded = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i], ',');
    REQUIRE(f.size() == 6);
    const double x = std::stod(f[1]);
    CHECK(x >= -1.0);
    CHECK(x <= 9.0);
    if (f[0] == "curve") {
      ++curve;
    } else if (f[0] == "eigen") {
      const auto mu = static_cast<std::size_t>(std::lround(x));
      CHECK(std::stod(f[2]) == doctest::Approx(d.eigenvalues()[mu]).epsilon(1e-14));
      CHECK(std::stod(f[3]) == doctest::Approx(interp[mu]).epsilon(1e-12));
      ++eigen;
    } else {
      CHECK(f[0] == "tilde");
      ++tilde;
    }
    if (f[5] == "0") ++excluded;
  }
  CHECK(curve == 200);
  CHECK(eigen == 10);
  CHECK(tilde == 9);
  CHECK(excluded == 1);

  CHECK(run({"zeta-curve", "--model", "pwke"}).code == 2);
  CHECK(run({"zeta-curve", "--grid", "10"}).code == 2);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "--check", "oracle-equivalence"});
  CHECK(one.code == 0);
  CHECK(one.out.find("oracle-equivalence model1 N=2..20: PASS") != std::string::npos);
  CHECK(one.out.find("checks passed") != std::string::npos);

  const auto t1 = run({"verify", "--check", "table1"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("60/60 within tolerance") != std::string::npos);

  // Two partial-wave reference values are not reproducible; the check reports it.
  const auto t2 = run({"verify", "--check", "table2"});
  CHECK(t2.code == 1);
  CHECK(t2.out.find("table2 jmatrix-exact/exact: PASS") != std::string::npos);
}

TEST_CASE("exit codes and errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"weights", "--model", "cubic"}).code == 2);
  CHECK(run({"weights", "--methods", "simpson"}).code == 2);
  CHECK(run({"weights", "--model", "pwke", "--methods", "broad"}).code == 2);

  const auto small = run({"weights", "--N", "1"});
  CHECK(small.code == 2);
  CHECK(small.err.rfind("error: ", 0) == 0);
  CHECK(run({"weights", "--B", "0"}).code == 2);
  CHECK(run({"weights", "--model", "pwke", "--lambda", "-1"}).code == 2);
  CHECK(run({"verify", "--check", "nothing"}).code == 2);
}

TEST_CASE("output file") {
  const std::string path = "test_cli_weights.csv";
  std::remove(path.c_str());
  const auto r = run({"weights", "--format", "csv", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"weights", "--format", "csv"}).out);
  std::remove(path.c_str());
}
