#include <cmath>
#include <string>

#include "doctest.h"
#include "smode/commands.hpp"
#include "smode/config.hpp"
#include "smode/errors.hpp"

using namespace smode;
using namespace smode::cli;

TEST_SUITE("config") {
  TEST_CASE("json overrides defaults") {
    const auto c = parse_config_json(R"({"intensity": 2e21, "duration": 3,
      "v_perp": 0.1, "v_z": 0.5, "thresholds": {"mu": 0.01, "width_rule": "piecewise"}})");
    CHECK(c.intensity == 2e21);
    CHECK(c.duration == 3.0);
    CHECK(c.wavelength == 800.0);
    CHECK(*c.v_perp == 0.1);
    CHECK(c.thresholds.mu == 0.01);
    CHECK(c.thresholds.shift == 0.1);
    CHECK(c.thresholds.width_rule == corrections::WidthRule::piecewise);
  }

  TEST_CASE("unknown and malformed keys are rejected") {
    CHECK_THROWS_AS(parse_config_json(R"({"intensty": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"thresholds": {"nu": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"({"intensity": "high"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_json("{"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/smode.json"), ConfigError);
    try {
      parse_config_json(R"({"intensty": 1})");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("intensty") != std::string::npos);
    }
  }

  TEST_CASE("sweep axes") {
    const auto a = parse_axis("intensity:1e20:1e22:3:log");
    CHECK(a.log);
    CHECK(a.value(1) == doctest::Approx(1e21));
    const auto b = parse_axis("duration:3:30:4");
    CHECK_FALSE(b.log);
    CHECK(b.value(3) == doctest::Approx(30.0));
    CHECK(b.value(1) == doctest::Approx(12.0));
    CHECK_THROWS_AS(parse_axis("colour:1:2:3"), ConfigError);
    CHECK_THROWS_AS(parse_axis("duration:1:2"), ConfigError);
    CHECK_THROWS_AS(parse_axis("duration:1:2:0"), ConfigError);
    CHECK_THROWS_AS(parse_axis("duration:0:2:3:log"), ConfigError);
    const auto c = parse_config_json(
        R"({"sweep": [{"name": "spot", "min": 1e-9, "max": 1e-7, "steps": 3, "scale": "log"}]})");
    REQUIRE(c.axes.size() == 1);
    CHECK(c.axes[0].value(2) == doctest::Approx(1e-7));
  }

  TEST_CASE("validation") {
    AnalysisConfig c;
    CHECK_NOTHROW(validate(c));
    c.gamma = 5.0;
    c.v_perp = 0.1;
    c.v_z = 0.2;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.gamma.reset();
    c.v_z.reset();
    CHECK_THROWS_AS(validate(c), ConfigError);
    AnalysisConfig d;
    d.axes = {parse_axis("spot:1:2:2"), parse_axis("duration:1:2:2"), parse_axis("intensity:1:2:2")};
    CHECK_THROWS_AS(validate(d), ConfigError);
    AnalysisConfig t;
    t.threads = 0;
    CHECK_THROWS_AS(validate(t), ConfigError);
    CHECK_THROWS_AS(set_parameter(t, "mass", 1.0), ConfigError);
  }

  TEST_CASE("analysis pipeline") {
    const auto a = run_analysis(AnalysisConfig{});
    CHECK(a.report.lambda == doctest::Approx(0.246540129096063).epsilon(1e-12));
    CHECK(a.report.verdict.all());
    AnalysisConfig bad;
    bad.intensity = 0.0;
    CHECK_THROWS(run_analysis(bad));
    AnalysisConfig fast;
    fast.gamma = 1.0;
    CHECK_THROWS_AS(run_analysis(fast), DomainError);
    fast.gamma = 100.0;
    CHECK(run_analysis(fast).kinematics.v == doctest::Approx(std::sqrt(1.0 - 1e-4)));
  }

  TEST_CASE("sweep rows are ordered and independent of the thread count") {
    AnalysisConfig c;
    c.axes = {parse_axis("duration:3:30:4"), parse_axis("intensity:1e20:1e22:3:log")};
    c.threads = 1;
    const auto one = sweep_csv(c);
    c.threads = 4;
    CHECK(sweep_csv(c) == one);
    std::size_t lines = 0;
    for (char ch : one) lines += ch == '\n';
    CHECK(lines == 13);
    CHECK(one.rfind("duration,intensity,lambda,", 0) == 0);
    CHECK(one.find("\r\n") != std::string::npos);
  }
}
