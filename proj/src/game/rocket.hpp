#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "eval/rng.hpp"
#include "eval/value.hpp"
#include "util/rational.hpp"

namespace recipe::game {

using eval::ImageExpr;
using eval::Posn;
using eval::RngState;

enum class Dir { Up, Down, Left, Right };

const char* dir_name(Dir d);
std::optional<Dir> parse_dir(std::string_view text);

// Scene dimensions, speeds and image sizes. Every field must be positive.
struct GameConfig {
  Rational width = 500;
  Rational height = 500;
  Rational delta = 5;
  Rational tick_dec = Rational(1, 10);
  Rational good_inc = 2;
  Rational bad_dec = 2;
  Rational max_fuel = 10;
  Rational gfuel_img_w = 20;
  Rational gfuel_img_h = 20;
  Rational bfuel_img_w = 20;
  Rational bfuel_img_h = 20;
  Rational rocket_img_w = 30;
  Rational rocket_img_h = 45;

  // Throws InvalidArgument naming the first non-positive field.
  void validate() const;

  // Applies the fields present in `overrides` on top of `base`. Values may be
  // JSON numbers or "n/d" strings. Throws InvalidArgument for unknown keys,
  // malformed values and invalid results.
  static GameConfig from_json(const nlohmann::json& overrides, const GameConfig& base);
  static GameConfig from_json(const nlohmann::json& overrides);
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

struct World {
  Posn rocket;
  Dir dir = Dir::Up;
  Rational flevel;
  Posn gfuel;
  Posn bfuel;

  friend bool operator==(const World&, const World&) = default;
};

// Each mover shifts by cfg.delta and clamps to [0,width]x[0,height]; y grows
// downward.
Posn move_rocket_up(const Posn& r, const GameConfig& cfg);
Posn move_rocket_down(const Posn& r, const GameConfig& cfg);
Posn move_rocket_left(const Posn& r, const GameConfig& cfg);
Posn move_rocket_right(const Posn& r, const GameConfig& cfg);
Posn move_rocket(const Posn& r, Dir d, const GameConfig& cfg);

Rational distance_on_x(const Posn& a, const Posn& b);
Rational distance_on_y(const Posn& a, const Posn& b);

// Inclusive: |dx| <= w/2 and |dy| <= h/2.
bool consumed(const Posn& rocket, const Posn& fuel, const Rational& fuel_img_w,
              const Rational& fuel_img_h);

// Arrow keys ("up", "down", "left", "right") change direction; other keys
// leave the world unchanged.
World handle_key(const World& w, std::string_view key);

// (random width, random height), drawing x first.
Posn respawn(const GameConfig& cfg, RngState& rng);

// One clock tick: move, drain, then good-fuel and bad-fuel consumption.
std::pair<World, RngState> tick(const World& w, const GameConfig& cfg, RngState rng);

bool game_over(const World& w);

// Rocket at the centre heading up with a full tank, good then bad fuel
// respawned from `rng`.
World initial_world(const GameConfig& cfg, RngState& rng);

// place(bfuel, place(gfuel, place(fuel bar, place(rocket, empty scene)))).
ImageExpr draw_world(const World& w, const GameConfig& cfg);

// True when every position is inside the scene and the fuel is in range.
bool valid_world(const World& w, const GameConfig& cfg);

// {rocket:{x,y}, dir, flevel, gfuel:{x,y}, bfuel:{x,y}, over}
nlohmann::ordered_json world_to_json(const World& w);
// Throws InvalidArgument.
World world_from_json(const nlohmann::json& doc);

// Nested {op:"place"|"empty"|"rect"|"circ"|"rotate", ...}
nlohmann::ordered_json scene_to_json(const ImageExpr& scene);

// Integer when integral, otherwise "n/d".
nlohmann::ordered_json rational_to_json(const Rational& r);

}  // namespace recipe::game
