#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pu/params.hpp"
#include "pu/scan_io.hpp"
#include "pu/spectra.hpp"

using namespace pu;
namespace sp = pu::spectra;

TEST_CASE("frozen spectrum values at the default coupling") {
  OscillatorParams p;
  CHECK(std::abs(sp::energy_indefinite({0, 0}, p) - (-0.612921)) <= 5e-6);
  CHECK(std::abs(sp::energy_positive({0, 0}, p) - 1.719785) <= 5e-6);
  OscillatorParams pd;
  pd.lambda = 0.25;
  CHECK(std::abs(sp::energy_degenerate(2, 1.0, pd) - 2.328427) <= 5e-6);
}

TEST_CASE("split energy recombines into its total") {
  const OscillatorParams p = params_from_epsilon(1.0, 1.0, 1.0, 0.05);
  const sp::EnergySplit s = sp::energy_split({3, 1}, p);
  CHECK(s.total() == s.discrete + s.linear);
  // discrete part carries the level difference, independent of eps
  const sp::EnergySplit s2 = sp::energy_split({3, 1}, params_from_epsilon(1.0, 1.0, 1.0, 0.01));
  CHECK(std::abs(s.discrete - s2.discrete) <= 1e-13);
}

TEST_CASE("limit schedule lands on valid integer labels") {
  OscillatorParams base;
  const sp::LimitSchedule sched = sp::limit_schedule(1, 1.0, base, 5, 2000);
  CHECK(sched.steps.size() == 5);
  for (const sp::ScheduleStep& st : sched.steps) {
    CHECK(st.n2 - st.n1 == 1);
    CHECK(st.n1 >= 0);
    CHECK(st.epsilon > 0.0);
  }
  const int last = sched.steps.back().n1 + sched.steps.back().n2;
  CHECK(std::abs(last - 2000) <= 1);
  for (std::size_t i = 1; i < sched.steps.size(); ++i)
    CHECK(sched.steps[i].epsilon < sched.steps[i - 1].epsilon);
}

TEST_CASE("schedule energy table tracks the degenerate target") {
  OscillatorParams base;
  const sp::LimitSchedule sched = sp::limit_schedule(2, 1.5, base, 4, 500);
  const auto rows = sp::schedule_energy_table(sched, base);
  CHECK(rows.size() == sched.steps.size());
  for (const sp::ScheduleEnergyRow& r : rows) {
    CHECK(std::abs(r.total - (r.discrete + r.linear)) <= 1e-12);
    CHECK(std::abs(r.abs_err - std::abs(r.total - r.target)) <= 1e-15);
  }
}

TEST_CASE("min_positive_gap finds the smallest distinct spacing") {
  CHECK(sp::min_positive_gap({1.0, 1.0, 1.25, 2.0}) == doctest::Approx(0.25));
}

TEST_CASE("fmt renders deterministically") {
  CHECK(io::fmt(0.1) == "0.1");
  CHECK(io::fmt(42LL) == "42");
  CHECK(io::fmt(-3.0) == "-3");
}

TEST_CASE("csv output echoes the configuration") {
  io::Table t;
  t.add_config("command", "demo");
  t.add_config("alpha", 0.25);
  t.columns = {"a", "b"};
  t.rows.push_back({"1", "2"});
  t.rows.push_back({"3", "4"});
  const std::string csv = io::to_csv(t);
  CHECK(csv == "# command=demo\n# alpha=0.25\na,b\n1,2\n3,4\n");
}

TEST_CASE("json output mirrors the csv schema") {
  io::Table t;
  t.add_config("command", "demo");
  t.columns = {"x"};
  t.rows.push_back({"7"});
  const nlohmann::json j = nlohmann::json::parse(io::to_json(t));
  CHECK(j["config"]["command"] == "demo");
  CHECK(j["columns"][0] == "x");
  CHECK(j["rows"][0][0] == "7");
}

TEST_CASE("write_table to a file reproduces the in-memory rendering") {
  io::Table t;
  t.add_config("k", 1.5);
  t.columns = {"v"};
  t.rows.push_back({"9"});
  const std::string path = "scan_io_test_tmp.csv";
  io::write_table(t, path, io::Format::Csv);
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == io::to_csv(t));
  std::remove(path.c_str());
}

TEST_CASE("parse_format accepts exactly csv and json") {
  CHECK(io::parse_format("csv") == io::Format::Csv);
  CHECK(io::parse_format("json") == io::Format::Json);
  CHECK_THROWS_AS(io::parse_format("xml"), std::domain_error);
}
