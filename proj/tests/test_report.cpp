#include <gtest/gtest.h>

#include "stabsign/report.hpp"

namespace {

namespace rp = stabsign::report;

rp::RunConfig small(rp::Command command) {
  rp::RunConfig cfg;
  cfg.command = command;
  cfg.alpha_grid = {0.5, 1.5};
  cfg.trials = 100'000;
  cfg.n_values = {2, 3, 4};
  cfg.ks_m = 1000;
  cfg.ks_replicates = 2000;
  cfg.tol = 1e-6;
  return cfg;
}

TEST(Config, Validation) {
  auto cfg = small(rp::Command::Integrate);
  cfg.alpha_grid = {-1.0};
  EXPECT_THROW(rp::run(cfg), rp::ConfigError);

  cfg = small(rp::Command::McSigns);
  cfg.alpha_grid = {2.5};
  EXPECT_THROW(cfg.validate(), rp::ConfigError);
  cfg.alpha_grid = {1.0};
  cfg.trials = 9999;
  EXPECT_THROW(cfg.validate(), rp::ConfigError);
  cfg.trials = 10'000;
  cfg.n_values = {33};
  EXPECT_THROW(cfg.validate(), rp::ConfigError);

  cfg = small(rp::Command::Integrate);
  cfg.alpha_grid = {3.0, 4.0};
  cfg.trials = 1;  // irrelevant for quadrature
  EXPECT_NO_THROW(cfg.validate());
  cfg.tol = 1e-11;
  EXPECT_THROW(cfg.validate(), rp::ConfigError);
}

TEST(Run, IntegrateRecordsInOrder) {
  auto cfg = small(rp::Command::Integrate);
  cfg.alpha_grid = {0.5, 3.0};
  const auto rep = rp::run(cfg);
  ASSERT_EQ(rep.checks.size(), 6u);
  const char* names[] = {"integral_I1", "pv_scheme_agreement", "integral_I2"};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(rep.checks[i].name, names[i % 3]);
  EXPECT_TRUE(rep.pass);

  cfg.which = rp::Which::I2;
  EXPECT_EQ(rp::run(cfg).checks.size(), 2u);
}

TEST(Run, PaintboxExactStrings) {
  auto cfg = small(rp::Command::Paintbox);
  cfg.n_values = {2, 4, 6};
  const auto rep = rp::run(cfg);
  ASSERT_GE(rep.checks.size(), 3u);
  EXPECT_EQ(rep.checks[0].value, "1/3");
  EXPECT_EQ(rep.checks[1].value, "1/5");
  EXPECT_EQ(rep.checks[2].value, "1/7");
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(rep.checks[i].pass);
  EXPECT_TRUE(rep.pass);
}

TEST(Run, ReportSkipsMonteCarloOutsideSamplerDomain) {
  auto cfg = small(rp::Command::DacCheck);
  cfg.command = rp::Command::Report;
  cfg.alpha_grid = {1.0, 3.0};
  const auto rep = rp::run(cfg);
  for (const auto& r : rep.checks) {
    if (r.name.rfind("integral_", 0) == 0 || r.name == "pv_scheme_agreement") continue;
    if (r.alpha) EXPECT_EQ(*r.alpha, 1.0) << r.name;
  }
}

TEST(Output, DeterministicAcrossThreadCounts) {
  auto cfg = small(rp::Command::Report);
  cfg.threads = 1;
  const std::string a = rp::to_json(rp::run(cfg), false).dump();
  cfg.threads = 4;
  const auto rep = rp::run(cfg);
  EXPECT_EQ(a, rp::to_json(rep, false).dump());
  const auto full = rp::to_json(rep);
  EXPECT_TRUE(full.contains("metadata"));
  EXPECT_EQ(full["metadata"]["runtime_ms"].size(), rep.checks.size());
  EXPECT_FALSE(full["config"].contains("threads"));
}

TEST(Output, JsonShape) {
  const auto rep = rp::run(small(rp::Command::DacCheck));
  const auto j = rp::to_json(rep);
  for (const char* key : {"version", "config", "checks", "pass"}) EXPECT_TRUE(j.contains(key));
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "value", "target", "tolerance", "pass"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
  }
}

TEST(Output, CsvOneRowPerCheck) {
  const auto rep = rp::run(small(rp::Command::Integrate));
  const std::string csv = rp::to_csv(rep);
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(rows, static_cast<long>(rep.checks.size()) + 2);
  EXPECT_EQ(csv.rfind("overall", std::string::npos) != std::string::npos, true);
}

TEST(Targets, ExactExpressions) {
  EXPECT_DOUBLE_EQ(rp::targets::pi_squared_over(6), 1.6449340668482264);
  EXPECT_DOUBLE_EQ(rp::targets::pi_squared_over(4), 2.4674011002723395);
  EXPECT_NEAR(rp::targets::gaussian_orthant_product(0.5L), 1.0 / 3.0, 1e-16);
  EXPECT_EQ(rp::targets::product_moment(5), 0.0);
  EXPECT_DOUBLE_EQ(rp::targets::product_moment(4), 0.2);
}

}  // namespace
