#include <gtest/gtest.h>

#include "game/rocket.hpp"
#include "util/error.hpp"

namespace recipe::game {
namespace {

const GameConfig kCfg{};

World world_at(Posn rocket, Dir dir, Rational flevel, Posn gfuel = {400, 400}, Posn bfuel = {100, 400}) {
  return World{rocket, dir, flevel, gfuel, bfuel};
}

TEST(Rocket, MoversFollowScreenCoordinates) {
  EXPECT_EQ(move_rocket_up({5, 15}, kCfg), (Posn{5, 10}));
  EXPECT_EQ(move_rocket_down({100, 80}, kCfg), (Posn{100, 85}));
  EXPECT_EQ(move_rocket_left({32, 51}, kCfg), (Posn{27, 51}));
  EXPECT_EQ(move_rocket_right({45, 18}, kCfg), (Posn{50, 18}));
  EXPECT_EQ(move_rocket({98, 98}, Dir::Left, kCfg), (Posn{93, 98}));
}

TEST(Rocket, MoversClampAtTheEdges) {
  EXPECT_EQ(move_rocket_up({10, 2}, kCfg), (Posn{10, 0}));
  EXPECT_EQ(move_rocket_left({1, 2}, kCfg), (Posn{0, 2}));
  EXPECT_EQ(move_rocket_right({498, 2}, kCfg), (Posn{500, 2}));
  EXPECT_EQ(move_rocket_down({3, 500}, kCfg), (Posn{3, 500}));
}

TEST(Rocket, Distances) {
  EXPECT_EQ(distance_on_x({100, 340}, {105, 335}), 5);
  EXPECT_EQ(distance_on_y({100, 340}, {105, 335}), 5);
  EXPECT_EQ(distance_on_x({25, 10}, {500, 450}), 475);
  EXPECT_EQ(distance_on_y({25, 10}, {500, 450}), 440);
  EXPECT_EQ(distance_on_x({7, 7}, {7, 7}), 0);
}

TEST(Rocket, ConsumptionIsInclusive) {
  EXPECT_TRUE(consumed({5, 20}, {4, 20}, 20, 20));
  EXPECT_FALSE(consumed({25, 10}, {320, 450}, 20, 20));
  EXPECT_TRUE(consumed({110, 50}, {100, 40}, 20, 20));
  EXPECT_FALSE(consumed({111, 50}, {100, 40}, 20, 20));
  // Swapping axes together with image dimensions gives the same answer.
  EXPECT_EQ(consumed({3, 40}, {10, 50}, 16, 30), consumed({40, 3}, {50, 10}, 30, 16));
}

TEST(Rocket, KeysOnlyChangeDirection) {
  World w = world_at({50, 50}, Dir::Up, 5);
  EXPECT_EQ(handle_key(w, "left").dir, Dir::Left);
  EXPECT_EQ(handle_key(w, "left").rocket, w.rocket);
  EXPECT_EQ(handle_key(w, "a"), w);
  EXPECT_EQ(handle_key(handle_key(w, "left"), "left"), handle_key(w, "left"));
}

TEST(Rocket, TickMovesAndDrains) {
  auto [next, rng] = tick(world_at({50, 50}, Dir::Right, 5), kCfg, RngState{1});
  EXPECT_EQ(next.rocket, (Posn{55, 50}));
  EXPECT_EQ(next.flevel, Rational(49, 10));
  EXPECT_EQ(rng, RngState{1});
}

TEST(Rocket, GoodFuelRefillsAndClamps) {
  // Rocket moves onto the good fuel; 9.5 - 0.1 + 2 clamps to 10.
  World w = world_at({100, 105}, Dir::Up, Rational(19, 2), {100, 100});
  auto [next, rng] = tick(w, kCfg, RngState{42});
  EXPECT_EQ(next.flevel, 10);
  EXPECT_EQ(next.gfuel, (Posn{284, 112}));  // first two draws at seed 42
  EXPECT_NE(rng, RngState{42});
}

TEST(Rocket, BadFuelDrainsAndClamps) {
  World w = world_at({100, 105}, Dir::Up, 1, {400, 400}, {100, 100});
  auto [next, rng] = tick(w, kCfg, RngState{42});
  EXPECT_EQ(next.flevel, 0);
  EXPECT_TRUE(game_over(next));
  EXPECT_EQ(next.bfuel, (Posn{284, 112}));
}

TEST(Rocket, GameOverOnlyWhenEmpty) {
  EXPECT_TRUE(game_over(world_at({0, 0}, Dir::Up, 0)));
  EXPECT_FALSE(game_over(world_at({0, 0}, Dir::Up, 10)));
  EXPECT_FALSE(game_over(world_at({0, 0}, Dir::Up, Rational(1, 10))));
}

TEST(Rocket, InitialWorldAtSeed42) {
  RngState rng{42};
  World w = initial_world(kCfg, rng);
  EXPECT_EQ(w.rocket, (Posn{250, 250}));
  EXPECT_EQ(w.dir, Dir::Up);
  EXPECT_EQ(w.flevel, 10);
  EXPECT_EQ(w.gfuel, (Posn{284, 112}));
  EXPECT_EQ(w.bfuel, (Posn{206, 315}));
  EXPECT_TRUE(valid_world(w, kCfg));
}

TEST(Rocket, SceneNestingOrder) {
  World w = world_at({10, 10}, Dir::Left, 8, {110, 120}, {340, 170});
  ImageExpr scene = draw_world(w, kCfg);
  const auto& outer = std::get<eval::PlaceImage>(scene.node);
  EXPECT_TRUE(std::holds_alternative<eval::CircleImage>(outer.image->node));
  const auto& good = std::get<eval::PlaceImage>(outer.base->node);
  EXPECT_EQ(good.x, 110);
  const auto& bar = std::get<eval::PlaceImage>(good.base->node);
  EXPECT_EQ(std::get<eval::RectImage>(bar.image->node).width, 80);
  EXPECT_EQ(bar.x, 400);
  const auto& rocket = std::get<eval::PlaceImage>(bar.base->node);
  EXPECT_EQ(std::get<eval::RotateImage>(rocket.image->node).degrees, 90);
  EXPECT_TRUE(std::holds_alternative<eval::EmptyScene>(rocket.base->node));
}

TEST(Rocket, JsonRoundTrip) {
  World w = world_at({10, 10}, Dir::Down, Rational(47, 5), {110, 120}, {340, 170});
  auto j = world_to_json(w);
  EXPECT_EQ(j["flevel"], "47/5");
  EXPECT_EQ(j["dir"], "down");
  EXPECT_EQ(j["rocket"]["x"], 10);
  EXPECT_EQ(j["over"], false);
  EXPECT_EQ(world_from_json(j), w);
  EXPECT_THROW(world_from_json(nlohmann::json{{"dir", "up"}}), InvalidArgument);
}

TEST(Rocket, SceneJson) {
  auto j = scene_to_json(draw_world(world_at({10, 10}, Dir::Up, 0), kCfg));
  EXPECT_EQ(j["op"], "place");
  EXPECT_EQ(j["image"]["op"], "circ");
  EXPECT_EQ(j["base"]["base"]["base"]["base"]["op"], "empty");
  EXPECT_EQ(j["base"]["base"]["image"]["width"], 0);
}

TEST(GameConfig, OverridesAndValidation) {
  auto cfg = GameConfig::from_json(nlohmann::json{{"delta", 3}, {"tick_dec", "1/4"}});
  EXPECT_EQ(cfg.delta, 3);
  EXPECT_EQ(cfg.tick_dec, Rational(1, 4));
  EXPECT_EQ(cfg.width, 500);
  EXPECT_EQ(GameConfig::from_json(nlohmann::json::parse(R"({"tick_dec": 0.1})")).tick_dec, Rational(1, 10));
  EXPECT_THROW(GameConfig::from_json(nlohmann::json{{"width", 0}}), InvalidArgument);
  EXPECT_THROW(GameConfig::from_json(nlohmann::json{{"height", -5}}), InvalidArgument);
  EXPECT_THROW(GameConfig::from_json(nlohmann::json{{"speed", 1}}), InvalidArgument);
  EXPECT_THROW(GameConfig::from_json(nlohmann::json{{"delta", "fast"}}), InvalidArgument);
  EXPECT_EQ(GameConfig::from_json(cfg.to_json()), cfg);
}

}  // namespace
}  // namespace recipe::game
