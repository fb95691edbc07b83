#include "game/rocket.hpp"

#include <algorithm>
#include <limits>

#include "util/error.hpp"

namespace recipe::game {

using eval::CircleImage;
using eval::EmptyScene;
using eval::PlaceImage;
using eval::RectImage;
using eval::RotateImage;

namespace {

Rational clamp(const Rational& v, const Rational& hi) {
  if (v < 0) return 0;
  if (v > hi) return hi;
  return v;
}

Posn clamp(const Posn& p, const GameConfig& cfg) {
  return Posn{clamp(p.x, cfg.width), clamp(p.y, cfg.height)};
}

Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

struct Field {
  const char* name;
  Rational GameConfig::*member;
};

constexpr Field kFields[] = {
    {"width", &GameConfig::width},
    {"height", &GameConfig::height},
    {"delta", &GameConfig::delta},
    {"tick_dec", &GameConfig::tick_dec},
    {"good_inc", &GameConfig::good_inc},
    {"bad_dec", &GameConfig::bad_dec},
    {"max_fuel", &GameConfig::max_fuel},
    {"gfuel_img_w", &GameConfig::gfuel_img_w},
    {"gfuel_img_h", &GameConfig::gfuel_img_h},
    {"bfuel_img_w", &GameConfig::bfuel_img_w},
    {"bfuel_img_h", &GameConfig::bfuel_img_h},
    {"rocket_img_w", &GameConfig::rocket_img_w},
    {"rocket_img_h", &GameConfig::rocket_img_h},
};

Rational rational_from_json(const nlohmann::json& v, const std::string& what) {
  std::optional<Rational> r;
  if (v.is_number_integer() || v.is_number_float()) {
    // The textual form keeps decimals exact (0.1 -> 1/10).
    r = parse_fraction(v.dump());
  } else if (v.is_string()) {
    r = parse_fraction(v.get<std::string>());
  }
  if (!r) throw InvalidArgument(what + ": expected a number or a \"n/d\" string");
  return *r;
}

Posn posn_from_json(const nlohmann::json& v, const std::string& what) {
  if (!v.is_object() || !v.contains("x") || !v.contains("y")) {
    throw InvalidArgument(what + ": expected {x, y}");
  }
  return Posn{rational_from_json(v["x"], what + ".x"), rational_from_json(v["y"], what + ".y")};
}

nlohmann::ordered_json posn_to_json(const Posn& p) {
  nlohmann::ordered_json j;
  j["x"] = rational_to_json(p.x);
  j["y"] = rational_to_json(p.y);
  return j;
}

nlohmann::ordered_json scene_number(const Rational& r) {
  if (is_integer(r)) return rational_to_json(r);
  return to_double(r);
}

eval::ImagePtr image(ImageExpr e) { return eval::make_image(std::move(e)); }

}  // namespace

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Up: return "up";
    case Dir::Down: return "down";
    case Dir::Left: return "left";
    case Dir::Right: return "right";
  }
  return "up";
}

std::optional<Dir> parse_dir(std::string_view text) {
  if (text == "up") return Dir::Up;
  if (text == "down") return Dir::Down;
  if (text == "left") return Dir::Left;
  if (text == "right") return Dir::Right;
  return std::nullopt;
}

void GameConfig::validate() const {
  for (const auto& f : kFields) {
    if (this->*f.member <= 0) {
      throw InvalidArgument(std::string("config.") + f.name + " must be positive, given " +
                            format_fraction(this->*f.member));
    }
  }
}

GameConfig GameConfig::from_json(const nlohmann::json& overrides, const GameConfig& base) {
  GameConfig cfg = base;
  if (overrides.is_null()) {
    cfg.validate();
    return cfg;
  }
  if (!overrides.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, value] : overrides.items()) {
    auto it = std::find_if(std::begin(kFields), std::end(kFields),
                           [&](const Field& f) { return key == f.name; });
    if (it == std::end(kFields)) throw InvalidArgument("config: unknown field " + key);
    cfg.*(it->member) = rational_from_json(value, "config." + key);
  }
  cfg.validate();
  return cfg;
}

GameConfig GameConfig::from_json(const nlohmann::json& overrides) {
  return from_json(overrides, GameConfig{});
}

nlohmann::ordered_json GameConfig::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& f : kFields) j[f.name] = rational_to_json(this->*f.member);
  return j;
}

Posn move_rocket_up(const Posn& r, const GameConfig& cfg) {
  return clamp(Posn{r.x, r.y - cfg.delta}, cfg);
}

Posn move_rocket_down(const Posn& r, const GameConfig& cfg) {
  return clamp(Posn{r.x, r.y + cfg.delta}, cfg);
}

Posn move_rocket_left(const Posn& r, const GameConfig& cfg) {
  return clamp(Posn{r.x - cfg.delta, r.y}, cfg);
}

Posn move_rocket_right(const Posn& r, const GameConfig& cfg) {
  return clamp(Posn{r.x + cfg.delta, r.y}, cfg);
}

Posn move_rocket(const Posn& r, Dir d, const GameConfig& cfg) {
  switch (d) {
    case Dir::Up: return move_rocket_up(r, cfg);
    case Dir::Down: return move_rocket_down(r, cfg);
    case Dir::Left: return move_rocket_left(r, cfg);
    default: return move_rocket_right(r, cfg);
  }
}

Rational distance_on_x(const Posn& a, const Posn& b) { return abs_diff(a.x, b.x); }
Rational distance_on_y(const Posn& a, const Posn& b) { return abs_diff(a.y, b.y); }

bool consumed(const Posn& rocket, const Posn& fuel, const Rational& fuel_img_w,
              const Rational& fuel_img_h) {
  return distance_on_x(rocket, fuel) <= fuel_img_w / 2 &&
         distance_on_y(rocket, fuel) <= fuel_img_h / 2;
}

World handle_key(const World& w, std::string_view key) {
  auto d = parse_dir(key);
  if (!d) return w;
  World out = w;
  out.dir = *d;
  return out;
}

Posn respawn(const GameConfig& cfg, RngState& rng) {
  auto draw = [&](const Rational& bound) {
    // random(n) needs a positive integer; fractional bounds round down.
    BigInt n = boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
    if (n < 1) n = 1;
    return Rational(rng.below(n));
  };
  Rational x = draw(cfg.width);
  Rational y = draw(cfg.height);
  return Posn{x, y};
}

std::pair<World, RngState> tick(const World& w, const GameConfig& cfg, RngState rng) {
  World next = w;
  next.rocket = move_rocket(w.rocket, w.dir, cfg);
  next.flevel = std::max(Rational(0), Rational(w.flevel - cfg.tick_dec));
  if (consumed(next.rocket, w.gfuel, cfg.gfuel_img_w, cfg.gfuel_img_h)) {
    next.flevel = std::min(cfg.max_fuel, Rational(next.flevel + cfg.good_inc));
    next.gfuel = respawn(cfg, rng);
  }
  if (consumed(next.rocket, w.bfuel, cfg.bfuel_img_w, cfg.bfuel_img_h)) {
    next.flevel = std::max(Rational(0), Rational(next.flevel - cfg.bad_dec));
    next.bfuel = respawn(cfg, rng);
  }
  return {next, rng};
}

bool game_over(const World& w) { return w.flevel == 0; }

World initial_world(const GameConfig& cfg, RngState& rng) {
  World w;
  w.rocket = Posn{cfg.width / 2, cfg.height / 2};
  w.dir = Dir::Up;
  w.flevel = cfg.max_fuel;
  w.gfuel = respawn(cfg, rng);
  w.bfuel = respawn(cfg, rng);
  return w;
}

ImageExpr draw_world(const World& w, const GameConfig& cfg) {
  static const Rational kBarHeight = 35;
  static const Rational kBarScale = 10;
  Rational angle = 0;
  switch (w.dir) {
    case Dir::Up: angle = 0; break;
    case Dir::Left: angle = 90; break;
    case Dir::Down: angle = 180; break;
    case Dir::Right: angle = 270; break;
  }
  auto rocket_img = image({RotateImage{angle, image({RectImage{cfg.rocket_img_w, cfg.rocket_img_h,
                                                               "solid", "gray"}})}});
  auto bar = image({RectImage{w.flevel * kBarScale, kBarHeight, "solid", "purple"}});
  auto gfuel_img = image({RectImage{cfg.gfuel_img_w, cfg.gfuel_img_h, "solid", "green"}});
  auto bfuel_img = image({CircleImage{cfg.bfuel_img_w / 2, "solid", "red"}});

  auto scene = image({EmptyScene{cfg.width, cfg.height}});
  scene = image({PlaceImage{rocket_img, w.rocket.x, w.rocket.y, scene}});
  scene = image({PlaceImage{bar, cfg.width - 100, 50, scene}});
  scene = image({PlaceImage{gfuel_img, w.gfuel.x, w.gfuel.y, scene}});
  return ImageExpr{PlaceImage{bfuel_img, w.bfuel.x, w.bfuel.y, scene}};
}

bool valid_world(const World& w, const GameConfig& cfg) {
  auto inside = [&](const Posn& p) {
    return p.x >= 0 && p.x <= cfg.width && p.y >= 0 && p.y <= cfg.height;
  };
  return inside(w.rocket) && inside(w.gfuel) && inside(w.bfuel) && w.flevel >= 0 &&
         w.flevel <= cfg.max_fuel;
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    BigInt n = boost::multiprecision::numerator(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
      return n.convert_to<long long>();
    }
  }
  return format_fraction(r);
}

nlohmann::ordered_json world_to_json(const World& w) {
  nlohmann::ordered_json j;
  j["rocket"] = posn_to_json(w.rocket);
  j["dir"] = dir_name(w.dir);
  j["flevel"] = rational_to_json(w.flevel);
  j["gfuel"] = posn_to_json(w.gfuel);
  j["bfuel"] = posn_to_json(w.bfuel);
  j["over"] = game_over(w);
  return j;
}

World world_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidArgument("world must be a JSON object");
  World w;
  w.rocket = posn_from_json(doc.value("rocket", nlohmann::json()), "rocket");
  auto dir = parse_dir(doc.value("dir", std::string()));
  if (!dir) throw InvalidArgument("dir must be one of up, down, left, right");
  w.dir = *dir;
  w.flevel = rational_from_json(doc.value("flevel", nlohmann::json()), "flevel");
  w.gfuel = posn_from_json(doc.value("gfuel", nlohmann::json()), "gfuel");
  w.bfuel = posn_from_json(doc.value("bfuel", nlohmann::json()), "bfuel");
  return w;
}

nlohmann::ordered_json scene_to_json(const ImageExpr& scene) {
  nlohmann::ordered_json j;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, EmptyScene>) {
          j["op"] = "empty";
          j["width"] = scene_number(node.width);
          j["height"] = scene_number(node.height);
        } else if constexpr (std::is_same_v<T, RectImage>) {
          j["op"] = "rect";
          j["width"] = scene_number(node.width);
          j["height"] = scene_number(node.height);
          j["mode"] = node.mode;
          j["color"] = node.color;
        } else if constexpr (std::is_same_v<T, CircleImage>) {
          j["op"] = "circ";
          j["radius"] = scene_number(node.radius);
          j["mode"] = node.mode;
          j["color"] = node.color;
        } else if constexpr (std::is_same_v<T, RotateImage>) {
          j["op"] = "rotate";
          j["angle"] = scene_number(node.degrees);
          j["image"] = scene_to_json(*node.image);
        } else {
          j["op"] = "place";
          j["image"] = scene_to_json(*node.image);
          j["x"] = scene_number(node.x);
          j["y"] = scene_number(node.y);
          j["base"] = scene_to_json(*node.base);
        }
      },
      scene.node);
  return j;
}

}  // namespace recipe::game
