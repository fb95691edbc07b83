#pragma once

// Seeded random key/tick traces over the rocket game.

#include <string>
#include <tuple>
#include <vector>

#include "game/rocket.hpp"

namespace recipe::testing {

struct Trace {
  std::vector<nlohmann::ordered_json> worlds;  // after every step
  std::string violation;                       // first broken invariant
};

// One third of the steps are key presses (arrows and a couple of no-op
// keys); the rest are ticks. Key choices use their own generator so the
// game's generator only advances on ticks.
inline Trace run_trace(std::uint64_t seed, int steps, const game::GameConfig& cfg) {
  static const char* kKeys[] = {"up", "down", "left", "right", " ", "a"};
  game::RngState rng{seed};
  game::RngState choices{seed ^ 0x9e3779b97f4a7c15ULL};
  game::World w = game::initial_world(cfg, rng);
  Trace t;
  auto in_scene = [&](const eval::Posn& p) {
    return p.x >= 0 && p.x <= cfg.width && p.y >= 0 && p.y <= cfg.height;
  };
  for (int i = 0; i < steps; ++i) {
    if (choices.below(3) == 0) {
      w = game::handle_key(w, kKeys[static_cast<int>(choices.below(6))]);
    } else {
      std::tie(w, rng) = game::tick(w, cfg, rng);
    }
    std::string where = "seed " + std::to_string(seed) + " step " + std::to_string(i) + ": ";
    if (t.violation.empty()) {
      if (w.flevel < 0 || w.flevel > cfg.max_fuel) t.violation = where + "fuel out of range";
      else if (!in_scene(w.rocket) || !in_scene(w.gfuel) || !in_scene(w.bfuel))
        t.violation = where + "posn outside the scene";
      else if (game::game_over(w) != (w.flevel == 0)) t.violation = where + "game over disagrees with fuel";
      else if (!game::valid_world(w, cfg)) t.violation = where + "world rejected by valid_world";
    }
    t.worlds.push_back(game::world_to_json(w));
  }
  return t;
}

struct TraceSuiteResult {
  int traces = 0;
  std::string violation;
  bool deterministic = true;
};

// `count` traces of `steps` steps; every trace is replayed once to confirm
// the serialized world sequence is identical.
inline TraceSuiteResult run_trace_suite(int count, int steps, const game::GameConfig& cfg) {
  TraceSuiteResult r;
  for (int s = 0; s < count; ++s) {
    auto seed = static_cast<std::uint64_t>(s);
    Trace a = run_trace(seed, steps, cfg);
    Trace b = run_trace(seed, steps, cfg);
    ++r.traces;
    if (r.violation.empty() && !a.violation.empty()) r.violation = a.violation;
    if (a.worlds.size() != b.worlds.size()) {
      r.deterministic = false;
    } else {
      for (std::size_t i = 0; i < a.worlds.size(); ++i) {
        if (a.worlds[i].dump() != b.worlds[i].dump()) r.deterministic = false;
      }
    }
  }
  return r;
}

}  // namespace recipe::testing
