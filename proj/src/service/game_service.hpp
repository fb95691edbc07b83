#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>

#include <json.hpp>

#include "game/rocket.hpp"

namespace recipe::service {

struct Response {
  int status = 200;
  std::string body;  // JSON
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Live game sessions behind a small JSON protocol:
//
//   POST /game              {seed, config?}  -> {id, world, over, config}
//   POST /game/{id}/key     {key}            -> {world, over}
//   POST /game/{id}/tick                     -> {world, over}
//   GET  /game/{id}/scene                    -> scene JSON
//   GET  /game/{id}                          -> {world, over, tick_count}
//
// Commands on one session are serialized by that session's mutex; different
// sessions never block each other. Key and tick on a finished game return the
// terminal world unchanged. Sessions idle longer than the timeout are dropped.
class GameService {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;

  explicit GameService(game::GameConfig defaults = {},
                       std::chrono::milliseconds idle_timeout = std::chrono::minutes(10),
                       Clock clock = [] { return std::chrono::steady_clock::now(); });

  // Never throws; protocol and validation errors become 4xx responses with
  // {error: message}.
  Response handle(std::string_view method, std::string_view path, std::string_view body);

  // Typed entry points used by handle(). Throw NotFound / InvalidArgument.
  nlohmann::ordered_json create(std::uint64_t seed, const nlohmann::json& overrides);
  nlohmann::ordered_json key(const std::string& id, const std::string& key);
  nlohmann::ordered_json tick(const std::string& id);
  nlohmann::ordered_json scene(const std::string& id);
  nlohmann::ordered_json view(const std::string& id);

  std::size_t live_sessions();

 private:
  struct Session {
    std::string id;
    game::World world;
    eval::RngState rng;
    game::GameConfig cfg;
    bool over = false;
    std::uint64_t tick_count = 0;
    std::chrono::steady_clock::time_point last_used;
    std::mutex mutex;
  };

  std::shared_ptr<Session> find(const std::string& id);
  void sweep(std::chrono::steady_clock::time_point now);
  std::string fresh_id();

  game::GameConfig defaults_;
  std::chrono::milliseconds idle_timeout_;
  Clock clock_;
  std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_source_;
};

}  // namespace recipe::service
