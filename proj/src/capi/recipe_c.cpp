// extern "C" surface over the core library. Every entry point converts C++
// exceptions into a status code plus a thread-local message.
#include "recipe/recipe.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "abstraction/synthesize.hpp"
#include "checker/recipe_checker.hpp"
#include "eval/test_engine.hpp"
#include "game/rocket.hpp"
#include "service/game_service.hpp"
#include "sexpr/parser.hpp"
#include "sexpr/printer.hpp"
#include "types/signature.hpp"
#include "util/error.hpp"

struct recipe_program {
  recipe::sexpr::Program program;
};

struct recipe_service {
  std::unique_ptr<recipe::service::GameService> service;
};

namespace {

thread_local std::string g_last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string located(const recipe::Error& e) {
  if (auto* shape = dynamic_cast<const recipe::ShapeError*>(&e)) {
    std::string where;
    for (const auto& span : shape->spans()) {
      where += where.empty() ? "" : ", ";
      where += recipe::describe(span);
    }
    return where.empty() ? e.what() : std::string(e.what()) + " (at " + where + ")";
  }
  if (e.span()) return recipe::describe(*e.span()) + ": " + e.what();
  return e.what();
}

recipe_status fail(recipe_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <class F>
recipe_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return RECIPE_OK;
  } catch (const recipe::ParseError& e) {
    return fail(RECIPE_PARSE_ERROR, located(e));
  } catch (const recipe::EvalError& e) {
    return fail(RECIPE_EVAL_ERROR, located(e));
  } catch (const recipe::ShapeError& e) {
    return fail(RECIPE_SHAPE_ERROR, located(e));
  } catch (const recipe::NoDifferenceError& e) {
    return fail(RECIPE_NO_DIFFERENCE, located(e));
  } catch (const recipe::UnknownFunction& e) {
    return fail(RECIPE_UNKNOWN_FUNCTION, located(e));
  } catch (const recipe::InvalidArgument& e) {
    return fail(RECIPE_INVALID_ARGUMENT, located(e));
  } catch (const recipe::Error& e) {
    return fail(RECIPE_INTERNAL, located(e));
  } catch (const std::exception& e) {
    return fail(RECIPE_INTERNAL, e.what());
  } catch (...) {
    return fail(RECIPE_INTERNAL, "unknown failure");
  }
}

std::vector<std::string> strings(const char* const* items, size_t count) {
  std::vector<std::string> out;
  if (!items) return out;
  for (size_t i = 0; i < count; ++i) {
    if (!items[i]) throw recipe::InvalidArgument("null string in option list");
    out.emplace_back(items[i]);
  }
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw recipe::InvalidArgument(std::string(what) + " must not be null");
}

}  // namespace

extern "C" {

const char* recipe_version(void) { return "0.1.0"; }

const char* recipe_status_name(recipe_status status) {
  switch (status) {
    case RECIPE_OK: return "ok";
    case RECIPE_PARSE_ERROR: return "parse error";
    case RECIPE_EVAL_ERROR: return "evaluation error";
    case RECIPE_SHAPE_ERROR: return "shape error";
    case RECIPE_NO_DIFFERENCE: return "no difference";
    case RECIPE_UNKNOWN_FUNCTION: return "unknown function";
    case RECIPE_INVALID_ARGUMENT: return "invalid argument";
    case RECIPE_NOT_FOUND: return "not found";
    case RECIPE_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* recipe_last_error(void) { return g_last_error.c_str(); }

void recipe_string_free(char* s) { std::free(s); }

recipe_status recipe_program_parse(const char* source, size_t length, recipe_program** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (!source && length) throw recipe::InvalidArgument("source must not be null");
    auto handle = std::make_unique<recipe_program>();
    handle->program = recipe::sexpr::parse_program(std::string_view(source ? source : "", length));
    *out = handle.release();
  });
}

void recipe_program_free(recipe_program* program) { delete program; }

recipe_status recipe_program_print(const recipe_program* program, char** out) {
  return guarded([&] {
    require(program, "program");
    require(out, "out");
    *out = duplicate(recipe::sexpr::print_program(program->program));
  });
}

recipe_status recipe_program_summary_json(const recipe_program* program, char** out) {
  return guarded([&] {
    require(program, "program");
    require(out, "out");
    using recipe::sexpr::DefKind;
    nlohmann::ordered_json defs = nlohmann::ordered_json::array();
    for (const auto& d : program->program.definitions) {
      nlohmann::ordered_json entry;
      switch (d.kind) {
        case DefKind::Constant: entry["kind"] = "constant"; break;
        case DefKind::Function: entry["kind"] = "function"; break;
        case DefKind::Test: entry["kind"] = recipe::sexpr::test_kind_name(d.test_kind); break;
      }
      if (d.kind != DefKind::Test) {
        entry["name"] = d.name;
      } else if (const std::string* fn = d.applied_function()) {
        entry["function"] = *fn;
      }
      entry["line"] = d.span.line;
      if (d.kind == DefKind::Function) entry["params"] = d.params;
      defs.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["definitions"] = std::move(defs);
    doc["free_comments"] = program->program.free_comments.size();
    *out = duplicate(doc.dump());
  });
}

recipe_status recipe_program_run(const recipe_program* program, uint64_t seed, int json,
                                 char** report, int* all_passed) {
  return guarded([&] {
    require(program, "program");
    require(report, "report");
    auto result = recipe::eval::run_program(program->program, seed);
    *report = duplicate(json ? recipe::eval::report_json(result) : recipe::eval::report_text(result));
    if (all_passed) *all_passed = result.tests.all_passed() && result.coverage.complete();
  });
}

recipe_status recipe_program_abstract(const recipe_program* program,
                                      const recipe_abstract_options* options, int json, char** out) {
  return guarded([&] {
    require(program, "program");
    require(options, "options");
    require(out, "out");
    if (!options->name || !*options->name) throw recipe::InvalidArgument("a function name is required");
    recipe::abstraction::SynthesisOptions opts;
    opts.name = options->name;
    if (options->param_count) opts.param_names = strings(options->params, options->param_count);
    for (auto& a : strings(options->atomic, options->atomic_count)) opts.atomic_forms.insert(a);
    if (options->purpose) opts.purpose = options->purpose;
    auto sf = recipe::abstraction::synthesize_program(
        program->program, opts, strings(options->samples, options->sample_count));
    std::string scaffold = recipe::abstraction::generate_scaffold(sf, sf.signature);
    if (!json) {
      *out = duplicate(scaffold);
      return;
    }
    nlohmann::ordered_json doc;
    doc["name"] = sf.name;
    doc["params"] = nlohmann::ordered_json::array();
    for (const auto& p : sf.params) {
      doc["params"].push_back({{"name", p.name}, {"type", recipe::types::render_type(p.type)}});
    }
    doc["body"] = recipe::sexpr::to_string(sf.body);
    doc["signature"] = recipe::types::render_signature(sf.signature);
    doc["warnings"] = sf.warnings;
    doc["scaffold"] = scaffold;
    *out = duplicate(doc.dump());
  });
}

recipe_status recipe_program_check(const recipe_program* program, const recipe_check_options* options,
                                   int json, char** report, int* passed) {
  return guarded([&] {
    require(program, "program");
    require(options, "options");
    require(report, "report");
    if (!options->function || !*options->function) {
      throw recipe::InvalidArgument("a function name is required");
    }
    recipe::checker::CheckConfig config;
    config.seed = options->seed;
    for (auto& a : strings(options->atomic, options->atomic_count)) config.atomic_forms.insert(a);
    auto result = recipe::checker::check_recipe(program->program, options->function, config);
    *report = duplicate(json ? recipe::checker::report_json(result) : recipe::checker::report_text(result));
    if (passed) *passed = result.passed();
  });
}

recipe_status recipe_service_create(const char* config_json, uint64_t idle_timeout_ms,
                                    recipe_service** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    recipe::game::GameConfig cfg;
    if (config_json && *config_json) {
      auto doc = nlohmann::json::parse(config_json, nullptr, false);
      if (doc.is_discarded() || !doc.is_object()) {
        throw recipe::InvalidArgument("game config must be a JSON object");
      }
      cfg = recipe::game::GameConfig::from_json(doc);
    }
    auto timeout = idle_timeout_ms ? std::chrono::milliseconds(idle_timeout_ms)
                                   : std::chrono::milliseconds(std::chrono::minutes(10));
    auto handle = std::make_unique<recipe_service>();
    handle->service = std::make_unique<recipe::service::GameService>(cfg, timeout);
    *out = handle.release();
  });
}

void recipe_service_free(recipe_service* service) { delete service; }

recipe_status recipe_service_handle(recipe_service* service, const char* method, const char* path,
                                    const char* body, int* http_status, char** response_body) {
  return guarded([&] {
    require(service, "service");
    require(method, "method");
    require(path, "path");
    require(http_status, "http_status");
    require(response_body, "response_body");
    auto response = service->service->handle(method, path, body ? body : "");
    *http_status = response.status;
    *response_body = duplicate(response.body);
  });
}

}  // extern "C"
