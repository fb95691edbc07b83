#include <gtest/gtest.h>

#include "support/game_traces.hpp"

namespace recipe::testing {
namespace {

TEST(GameTraces, DefaultConfiguration) {
  auto r = run_trace_suite(1000, 200, game::GameConfig{});
  EXPECT_EQ(r.traces, 1000);
  EXPECT_EQ(r.violation, "");
  EXPECT_TRUE(r.deterministic);
}

TEST(GameTraces, SmallSceneWithFastDrain) {
  game::GameConfig cfg;
  cfg.width = 40;
  cfg.height = 30;
  cfg.delta = 7;
  cfg.tick_dec = Rational(1, 3);
  cfg.max_fuel = 3;
  auto r = run_trace_suite(200, 200, cfg);
  EXPECT_EQ(r.violation, "");
  EXPECT_TRUE(r.deterministic);
}

TEST(GameTraces, DifferentSeedsDiverge) {
  auto a = run_trace(1, 50, game::GameConfig{});
  auto b = run_trace(2, 50, game::GameConfig{});
  EXPECT_NE(a.worlds, b.worlds);
}

}  // namespace
}  // namespace recipe::testing
