#include "service/game_service.hpp"

#include <vector>

#include "util/error.hpp"

namespace recipe::service {

namespace {

using Json = nlohmann::ordered_json;

Response error(int status, const std::string& message) {
  return Response{status, Json{{"error", message}}.dump()};
}

std::vector<std::string_view> split_path(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    auto slash = path.find('/');
    parts.push_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash);
  }
  return parts;
}

nlohmann::json parse_body(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return nlohmann::json::object();
  auto doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw InvalidArgument("request body is not valid JSON");
  if (!doc.is_object()) throw InvalidArgument("request body must be a JSON object");
  return doc;
}

}  // namespace

GameService::GameService(game::GameConfig defaults, std::chrono::milliseconds idle_timeout, Clock clock)
    : defaults_(std::move(defaults)),
      idle_timeout_(idle_timeout),
      clock_(std::move(clock)),
      id_source_(std::random_device{}()) {
  defaults_.validate();
}

std::string GameService::fresh_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  for (;;) {
    std::uint64_t bits = id_source_();
    std::string id(16, '0');
    for (int i = 15; i >= 0; --i, bits >>= 4) id[i] = kHex[bits & 0xF];
    if (!sessions_.count(id)) return id;
  }
}

void GameService::sweep(std::chrono::steady_clock::time_point now) {
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock lock(it->second->mutex, std::try_to_lock);
    if (lock.owns_lock() && now - it->second->last_used > idle_timeout_) {
      lock.unlock();
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::unique_lock lock(sessions_mutex_);
  sweep(clock_());
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw NotFound("no game with id " + id);
  return it->second;
}

std::size_t GameService::live_sessions() {
  std::unique_lock lock(sessions_mutex_);
  sweep(clock_());
  return sessions_.size();
}

Json GameService::create(std::uint64_t seed, const nlohmann::json& overrides) {
  game::GameConfig cfg = game::GameConfig::from_json(overrides, defaults_);
  auto session = std::make_shared<Session>();
  session->cfg = cfg;
  session->rng = eval::RngState{seed};
  session->world = game::initial_world(cfg, session->rng);
  session->over = game::game_over(session->world);
  session->last_used = clock_();
  {
    std::unique_lock lock(sessions_mutex_);
    sweep(session->last_used);
    session->id = fresh_id();
    sessions_[session->id] = session;
  }
  Json out;
  out["id"] = session->id;
  out["world"] = game::world_to_json(session->world);
  out["over"] = session->over;
  out["config"] = cfg.to_json();
  return out;
}

Json GameService::key(const std::string& id, const std::string& key) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = clock_();
  if (!session->over) session->world = game::handle_key(session->world, key);
  return Json{{"world", game::world_to_json(session->world)}, {"over", session->over}};
}

Json GameService::tick(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = clock_();
  if (!session->over) {
    auto [world, rng] = game::tick(session->world, session->cfg, session->rng);
    session->world = std::move(world);
    session->rng = rng;
    session->over = game::game_over(session->world);
    ++session->tick_count;
  }
  return Json{{"world", game::world_to_json(session->world)}, {"over", session->over}};
}

Json GameService::scene(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = clock_();
  return game::scene_to_json(game::draw_world(session->world, session->cfg));
}

Json GameService::view(const std::string& id) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->last_used = clock_();
  return Json{{"world", game::world_to_json(session->world)},
              {"over", session->over},
              {"tick_count", session->tick_count}};
}

Response GameService::handle(std::string_view method, std::string_view path, std::string_view body) {
  try {
    auto parts = split_path(path);
    if (parts.empty() || parts[0] != "game") return error(404, "unknown route");
    if (parts.size() == 1) {
      if (method != "POST") return error(405, "use POST /game to create a game");
      auto doc = parse_body(body);
      std::uint64_t seed = 0;
      if (doc.contains("seed")) {
        const auto& s = doc["seed"];
        if (s.is_number_unsigned()) {
          seed = s.get<std::uint64_t>();
        } else if (s.is_number_integer() && s.get<std::int64_t>() >= 0) {
          seed = static_cast<std::uint64_t>(s.get<std::int64_t>());
        } else {
          throw InvalidArgument("seed must be a non-negative 64-bit integer");
        }
      }
      return Response{200, create(seed, doc.value("config", nlohmann::json())).dump()};
    }
    std::string id(parts[1]);
    if (parts.size() == 2) {
      if (method != "GET") return error(405, "use GET /game/{id}");
      return Response{200, view(id).dump()};
    }
    if (parts.size() == 3) {
      std::string_view action = parts[2];
      if (action == "key") {
        if (method != "POST") return error(405, "use POST /game/{id}/key");
        auto doc = parse_body(body);
        if (!doc.contains("key") || !doc["key"].is_string()) {
          throw InvalidArgument("body must be {\"key\": string}");
        }
        return Response{200, key(id, doc["key"].get<std::string>()).dump()};
      }
      if (action == "tick") {
        if (method != "POST") return error(405, "use POST /game/{id}/tick");
        return Response{200, tick(id).dump()};
      }
      if (action == "scene") {
        if (method != "GET") return error(405, "use GET /game/{id}/scene");
        return Response{200, scene(id).dump()};
      }
    }
    return error(404, "unknown route");
  } catch (const NotFound& e) {
    return error(404, e.what());
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

}  // namespace recipe::service
