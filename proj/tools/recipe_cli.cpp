// Command-line front end. Talks to the library only through recipe.h.
//
// Exit codes: 0 success, 1 failing tests or recipe steps (or an abstraction
// that cannot be built), 2 unreadable input, parse errors and usage errors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "recipe/recipe.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct ProgramDeleter {
  void operator()(recipe_program* p) const { recipe_program_free(p); }
};
using ProgramPtr = std::unique_ptr<recipe_program, ProgramDeleter>;

struct ServiceDeleter {
  void operator()(recipe_service* s) const { recipe_service_free(s); }
};
using ServicePtr = std::unique_ptr<recipe_service, ServiceDeleter>;

// Owns a string returned by the library.
class Text {
 public:
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { recipe_string_free(ptr_); }
  char** out() { return &ptr_; }
  std::string str() const { return ptr_ ? ptr_ : ""; }

 private:
  char* ptr_ = nullptr;
};

bool read_file(const std::string& path, std::string& contents) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  contents = buf.str();
  return true;
}

void print_report(const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
}

int report_error(const std::string& context, recipe_status status) {
  std::cerr << context << ": " << recipe_status_name(status) << ": " << recipe_last_error() << '\n';
  switch (status) {
    case RECIPE_PARSE_ERROR:
    case RECIPE_INVALID_ARGUMENT:
    case RECIPE_UNKNOWN_FUNCTION:
    case RECIPE_NOT_FOUND:
      return kUsage;
    default:
      return kFailed;
  }
}

// Loads and parses `path`; returns an exit code when that fails.
int load(const std::string& path, ProgramPtr& program) {
  std::string source;
  if (!read_file(path, source)) {
    std::cerr << path << ": cannot read file\n";
    return kUsage;
  }
  recipe_program* raw = nullptr;
  if (auto st = recipe_program_parse(source.data(), source.size(), &raw); st != RECIPE_OK) {
    return report_error(path, st);
  }
  program.reset(raw);
  return kOk;
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

struct Options {
  std::string file;
  std::string function;
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> atomic;
  std::vector<std::string> samples;
  std::uint64_t seed = 0;
  bool json = false;
  std::string config;
  std::string host = "127.0.0.1";
  int port = 8080;
};

int cmd_parse(const Options& o) {
  ProgramPtr program;
  if (int rc = load(o.file, program)) return rc;
  Text out;
  auto st = o.json ? recipe_program_summary_json(program.get(), out.out())
                   : recipe_program_print(program.get(), out.out());
  if (st != RECIPE_OK) return report_error(o.file, st);
  print_report(out.str());
  return kOk;
}

int cmd_test(const Options& o) {
  ProgramPtr program;
  if (int rc = load(o.file, program)) return rc;
  Text out;
  int passed = 0;
  if (auto st = recipe_program_run(program.get(), o.seed, o.json, out.out(), &passed); st != RECIPE_OK) {
    return report_error(o.file, st);
  }
  print_report(out.str());
  return passed ? kOk : kFailed;
}

int cmd_abstract(const Options& o) {
  ProgramPtr program;
  if (int rc = load(o.file, program)) return rc;
  auto params = c_strings(o.params);
  auto atomic = c_strings(o.atomic);
  auto samples = c_strings(o.samples);
  recipe_abstract_options opts{};
  opts.name = o.name.c_str();
  opts.params = params.data();
  opts.param_count = params.size();
  opts.atomic = atomic.data();
  opts.atomic_count = atomic.size();
  opts.samples = samples.data();
  opts.sample_count = samples.size();
  Text out;
  if (auto st = recipe_program_abstract(program.get(), &opts, o.json, out.out()); st != RECIPE_OK) {
    return report_error(o.file, st);
  }
  print_report(out.str());
  return kOk;
}

int cmd_check(const Options& o) {
  ProgramPtr program;
  if (int rc = load(o.file, program)) return rc;
  auto atomic = c_strings(o.atomic);
  recipe_check_options opts{};
  opts.function = o.function.c_str();
  opts.seed = o.seed;
  opts.atomic = atomic.data();
  opts.atomic_count = atomic.size();
  Text out;
  int passed = 0;
  if (auto st = recipe_program_check(program.get(), &opts, o.json, out.out(), &passed); st != RECIPE_OK) {
    return report_error(o.file, st);
  }
  print_report(out.str());
  return passed ? kOk : kFailed;
}

int cmd_serve(const Options& o) {
  std::string config;
  if (!o.config.empty() && !read_file(o.config, config)) {
    std::cerr << o.config << ": cannot read file\n";
    return kUsage;
  }
  recipe_service* raw = nullptr;
  if (auto st = recipe_service_create(config.c_str(), 0, &raw); st != RECIPE_OK) {
    return report_error(o.config.empty() ? "serve" : o.config, st);
  }
  ServicePtr service(raw);

  httplib::Server server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
    int status = 500;
    Text body;
    if (recipe_service_handle(service.get(), req.method.c_str(), req.path.c_str(), req.body.c_str(),
                              &status, body.out()) != RECIPE_OK) {
      res.status = 500;
      res.set_content(std::string("{\"error\":\"") + "internal failure" + "\"}", "application/json");
      return;
    }
    res.status = status;
    res.set_content(body.str(), "application/json");
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Delete(".*", forward);
  server.Patch(".*", forward);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  int port = o.port;
  if (port == 0) {
    port = server.bind_to_any_port(o.host);
  } else if (!server.bind_to_port(o.host, port)) {
    port = -1;
  }
  if (port < 0) {
    std::cerr << "serve: cannot bind " << o.host << ":" << o.port << '\n';
    return kUsage;
  }
  std::cerr << "serving rocket game on http://" << o.host << ":" << port << '\n';
  return server.listen_after_bind() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design-recipe tools for teaching-language programs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", recipe_version());

  Options o;
  auto add_file = [&o](CLI::App* sub) {
    sub->add_option("file", o.file, "Program source")->required()->check(CLI::ExistingFile);
  };
  auto add_json = [&o](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
  auto add_seed = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Seed for random and check-random")->capture_default_str();
  };
  auto add_atomic = [&o](CLI::App* sub) {
    sub->add_option("--atomic", o.atomic, "Extra constructors treated as single values")->delimiter(',');
  };

  auto* parse = app.add_subcommand("parse", "Parse and print a program in canonical form");
  add_file(parse);
  add_json(parse);

  auto* test = app.add_subcommand("test", "Run check-expect tests and report coverage");
  add_file(test);
  add_seed(test);
  add_json(test);

  auto* abstract = app.add_subcommand("abstract", "Synthesize a function from sample expressions");
  add_file(abstract);
  abstract->add_option("--name", o.name, "Name of the function to build")->required();
  abstract->add_option("--params", o.params, "Parameter names in hole order")->delimiter(',');
  abstract->add_option("--samples", o.samples, "Constants to use as samples")->delimiter(',');
  add_atomic(abstract);
  add_json(abstract);

  auto* check = app.add_subcommand("check", "Audit a function against the design recipe");
  add_file(check);
  check->add_option("--function", o.function, "Function to audit")->required();
  add_seed(check);
  add_atomic(check);
  add_json(check);

  auto* serve = app.add_subcommand("serve", "Serve the rocket game over HTTP");
  serve->add_option("--host", o.host, "Address to bind")->capture_default_str();
  serve->add_option("--port", o.port, "Port (0 picks a free one)")->capture_default_str();
  serve->add_option("--config", o.config, "Game config JSON file")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (parse->parsed()) return cmd_parse(o);
  if (test->parsed()) return cmd_test(o);
  if (abstract->parsed()) return cmd_abstract(o);
  if (check->parsed()) return cmd_check(o);
  return cmd_serve(o);
}
