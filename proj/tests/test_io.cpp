#include <doctest.h>

#include <cmath>
#include <sstream>

#include "trotterlab/config.hpp"
#include "trotterlab/csvio.hpp"

using namespace trotterlab;

TEST_CASE("state csv round trip preserves sectors and profiles") {
  auto g = spectral::build_grid(25.0, 64);
  states::MultiSectorState st;
  st.insert(states::hydrogen_state(1, 0, 0, g));
  st.insert(states::hydrogen_state(3, 2, -1, g));

  std::stringstream ss;
  csvio::write_state(ss, st);
  auto back = csvio::read_state(ss);

  REQUIRE(back.sectors.size() == st.sectors.size());
  CHECK(back.grid()->n == 64);
  CHECK(back.grid()->r_max == doctest::Approx(25.0).epsilon(1e-12));
  for (const auto& [key, sec] : st.sectors) {
    const auto& other = back.sectors.at(key);
    for (int j = 0; j < 64; ++j) CHECK(std::abs(other.u[j] - sec.u[j]) < 1e-15);
  }
}

TEST_CASE("state csv rejects malformed input") {
  std::stringstream no_header("1,0,0.5,1.0,0.0\n");
  CHECK_THROWS_AS(csvio::read_state(no_header), std::invalid_argument);

  std::stringstream bad_field("ell,m,r,re_u,im_u\n1,0,0.5,XYZ,0.0\n");
  CHECK_THROWS_WITH_AS(csvio::read_state(bad_field),
                       doctest::Contains("line 2"), std::invalid_argument);

  // non-uniform mesh
  std::stringstream warped("ell,m,r,re_u,im_u\n");
  for (int j = 0; j < 10; ++j) {
    const double r = 0.5 * (j + 1) * (j + 2) / 2.0;
    warped << "0,0," << r << ",1.0,0.0\n";
  }
  CHECK_THROWS_AS(csvio::read_state(warped), std::invalid_argument);
}

TEST_CASE("series csv round trip") {
  ratefit::ConvergenceSeries s;
  s.meta = {"strang", "hydrogen:1:0:0", 0, 2000, 60.0, 1.0};
  double t = 1.0 / 16.0;
  for (int i = 0; i < 6; ++i) {
    s.points.push_back({t, 3.0 * std::pow(t, 0.25), 16 << i});
    t *= 0.5;
  }
  std::stringstream ss;
  csvio::write_series(ss, s);
  const std::string first_line = ss.str().substr(0, ss.str().find('\n'));
  CHECK(first_line == "scheme,ell,n,r_max,T,L,t,error");
  auto back = csvio::read_series(ss);
  REQUIRE(back.points.size() == s.points.size());
  for (size_t i = 0; i < s.points.size(); ++i) {
    CHECK(back.points[i].t == s.points[i].t);           // exact round trip
    CHECK(back.points[i].error == s.points[i].error);
    CHECK(back.points[i].L == s.points[i].L);
  }
  CHECK(back.meta.grid_n == 2000);
}

TEST_CASE("runs csv header") {
  std::stringstream ss;
  csvio::write_runs(ss, {{"lie", 1, 500, 60.0, 1.0, 16, 0.0625, 1e-3}});
  CHECK(ss.str().rfind("scheme,ell,n_grid,r_max,T,L,t_step,error_l2\n", 0) == 0);
}

TEST_CASE("config parsing: values, lists, comments") {
  const std::string text =
      "# demo config\n"
      "scheme = lie\n"
      "state = hydrogen:3:2:0\n"
      "ell_condition = 1\n"
      "c = 2.0\n"
      "sign = -1\n"
      "grid_n = 500, 1000, 2000\n"
      "r_max = 180\n"
      "T = 1\n"
      "L = 16,32,64,128\n"
      "out = /tmp/demo\n"
      "seed = 7\n";
  auto cfg = config::parse_config_text(text);
  CHECK(cfg.scheme == "lie");
  CHECK(cfg.ell_condition == 1);
  CHECK(cfg.grid_n == std::vector<int>{500, 1000, 2000});
  CHECK(cfg.L.size() == 4);
  CHECK(cfg.r_max == doctest::Approx(180.0));
  CHECK(cfg.seed == 7);
}

TEST_CASE("config parsing failures carry line numbers") {
  CHECK_THROWS_WITH_AS(config::parse_config_text("scheme = lie\nbogus_key = 3\n", "cfg"),
                       doctest::Contains("cfg:2"), config::config_error);
  CHECK_THROWS_WITH_AS(config::parse_config_text("scheme = euler\n", "cfg"),
                       doctest::Contains("cfg:1"), config::config_error);
  CHECK_THROWS_WITH_AS(config::parse_config_text("grid_n = 2000, 1000\n", "cfg"),
                       doctest::Contains("ascending"), config::config_error);
  CHECK_THROWS_WITH_AS(config::parse_config_text("T = \n", "cfg"), doctest::Contains("cfg:1"),
                       config::config_error);
}
