#include "abstraction/synthesize.hpp"
#include "sexpr/printer.hpp"

namespace recipe::abstraction {

using sexpr::Definition;

std::string generate_scaffold(const SynthesizedFunction& sf, const types::Signature& signature) {
  sexpr::Program program;
  for (const auto& d : sf.support) program.definitions.push_back(d);

  for (std::size_t i = 0; i < sf.samples.size(); ++i) {
    Definition d = sf.samples[i];
    if (i == 0 && d.comments.empty()) d.comments.lines = {"; Sample Expressions"};
    program.definitions.push_back(std::move(d));
  }

  bool first_test = true;
  auto add_test = [&](Definition t) {
    t.comments = {};
    if (first_test) t.comments.lines = {"; Tests"};
    first_test = false;
    program.definitions.push_back(std::move(t));
  };
  for (const auto& t : sf.variable_tests) add_test(t);
  for (const auto& t : sf.fresh_tests) add_test(t);
  if (sf.fresh_tests.empty()) {
    sexpr::CommentBlock todo;
    todo.lines = {"; TODO: add tests with new concrete values"};
    program.free_comments.push_back({std::move(todo), program.definitions.size()});
  }

  Definition fn = sf.definition();
  fn.comments.lines = {"; " + types::render_signature(signature), "; Purpose: " + sf.purpose};
  program.definitions.push_back(std::move(fn));
  return sexpr::print_program(program);
}

}  // namespace recipe::abstraction
