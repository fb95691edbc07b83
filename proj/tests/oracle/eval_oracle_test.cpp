#include <gtest/gtest.h>

#include "eval/evaluator.hpp"
#include "eval/value.hpp"
#include "sexpr/parser.hpp"
#include "support/arith.hpp"

namespace recipe {
namespace {

using testing::ArithGen;
using testing::RefValue;

std::optional<RefValue> library_eval(const std::string& source, const testing::Env& env) {
  eval::Evaluator ev;
  eval::Bindings locals;
  for (const auto& [name, value] : env) locals.emplace_back(name, eval::Value::number(value));
  eval::RngState rng{0};
  try {
    eval::Value v = ev.evaluate(sexpr::parse_expr(source), locals, rng);
    if (v.is_boolean()) return RefValue{true, 0, v.as_boolean()};
    if (v.is_number()) return RefValue{false, v.as_number(), false};
    ADD_FAILURE() << "unexpected value kind for " << source;
  } catch (const EvalError&) {
  }
  return std::nullopt;
}

TEST(EvalOracle, RandomExpressionsAgreeWithTheReference) {
  ArithGen gen(20240611);
  gen.vars = {"x", "y"};
  int errors = 0;
  for (int i = 0; i < 3000; ++i) {
    auto node = i % 4 == 0 ? gen.boolean(2 + (i / 4) % 3) : gen.numeric(1 + i % 4);
    testing::Env env{{"x", Rational(gen.pick_int(-5, 5))}, {"y", Rational(gen.pick_int(1, 7), 3)}};
    std::string source = testing::to_source(*node);
    auto expected = testing::ref_eval(*node, env);
    auto actual = library_eval(source, env);
    if (!expected) ++errors;
    ASSERT_EQ(actual.has_value(), expected.has_value()) << source;
    if (expected) {
      ASSERT_EQ(*actual, *expected) << source;
    }
  }
  // Both outcomes must actually be exercised.
  EXPECT_GT(errors, 0);
  EXPECT_LT(errors, 1500);
}

TEST(EvalOracle, UserFunctionsAgreeWithTheReference) {
  ArithGen gen(77);
  gen.vars = {"n"};
  for (int i = 0; i < 500; ++i) {
    auto body = gen.numeric(4);
    std::string program = "(define (g n) " + testing::to_source(*body) + ")\n";
    auto p = sexpr::parse_program(program);
    eval::Evaluator ev;
    ev.define_function(p.definitions[0]);
    Rational arg(gen.pick_int(-6, 6), gen.pick_int(1, 3));
    auto expected = testing::ref_eval(*body, {{"n", arg}});
    eval::RngState rng{0};
    std::string call = "(g " + testing::rational_source(arg) + ")";
    try {
      eval::Value v = ev.evaluate(sexpr::parse_expr(call), rng);
      ASSERT_TRUE(expected) << program << call;
      ASSERT_EQ(v, eval::Value::number(expected->num)) << program << call;
    } catch (const EvalError&) {
      ASSERT_FALSE(expected) << program << call;
    }
  }
}

}  // namespace
}  // namespace recipe
