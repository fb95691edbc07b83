#include <gtest/gtest.h>

#include "abstraction/generalize.hpp"
#include "eval/evaluator.hpp"
#include "sexpr/parser.hpp"
#include "types/signature.hpp"

namespace recipe::types {
namespace {

TEST(SemType, TypeOfValues) {
  EXPECT_EQ(type_of(eval::Value::number(3)), SemType::nonneg_real());
  EXPECT_EQ(type_of(eval::Value::number(-3)), SemType::real());
  EXPECT_EQ(type_of(eval::Value::string("up")), SemType::string_enum({"up"}));
  EXPECT_EQ(type_of(eval::Value::boolean(false)), SemType::boolean());
  EXPECT_EQ(type_of(eval::Value::posn(1, 2)), SemType::posn());
}

TEST(SemType, JoinExamples) {
  EXPECT_EQ(join(SemType::nonneg_real(), SemType::real()), SemType::real());
  EXPECT_EQ(join(SemType::never(), SemType::posn()), SemType::posn());
  EXPECT_EQ(join(SemType::posn(), SemType::boolean()), SemType::any());
  EXPECT_EQ(join(SemType::string_enum({"up"}), SemType::string_enum({"down"})),
            SemType::string_enum({"down", "up"}));
  EXPECT_EQ(join(SemType::string_enum({"a"}), SemType::string_any()), SemType::string_any());
  EXPECT_EQ(join(SemType::alias_of("rocket"), SemType::alias_of("rocket")), SemType::alias_of("rocket"));
  EXPECT_EQ(join(SemType::alias_of("rocket"), SemType::alias_of("fuel")), SemType::any());
}

TEST(SemType, EnumsWidenPastTheLimit) {
  std::set<std::string> eight{"a", "b", "c", "d", "e", "f", "g", "h"};
  EXPECT_EQ(join(SemType::string_enum(eight), SemType::string_enum({"a"})), SemType::string_enum(eight));
  EXPECT_EQ(join(SemType::string_enum(eight), SemType::string_enum({"i"})), SemType::string_any());
  EXPECT_EQ(join(SemType::string_enum({"a", "b"}), SemType::string_enum({"c"}), 2), SemType::string_any());
}

TEST(SemType, Subtyping) {
  EXPECT_TRUE(subtype(SemType::nonneg_real(), SemType::real()));
  EXPECT_FALSE(subtype(SemType::real(), SemType::nonneg_real()));
  EXPECT_TRUE(subtype(SemType::string_enum({"up"}), SemType::string_any()));
  EXPECT_TRUE(subtype(SemType::posn(), SemType::any()));
  EXPECT_TRUE(subtype(SemType::never(), SemType::boolean()));
}

TEST(SemType, RenderAndParseTokens) {
  EXPECT_EQ(render_type(SemType::nonneg_real()), "NonNegReal");
  EXPECT_EQ(render_type(SemType::string_enum({"up", "down"})), "\"down\"|\"up\"");
  EXPECT_EQ(parse_type_token("ℝ≥0"), SemType::nonneg_real());
  EXPECT_EQ(parse_type_token("ℝ"), SemType::real());
  EXPECT_EQ(parse_type_token("Number"), SemType::real());
  EXPECT_EQ(parse_type_token("boolean"), SemType::boolean());
  EXPECT_EQ(parse_type_token("\"down\"|\"up\""), SemType::string_enum({"up", "down"}));
  EXPECT_EQ(parse_type_token("rocket"), SemType::alias_of("rocket"));
  EXPECT_EQ(parse_type_token("rocket", {{"rocket", SemType::posn()}}), SemType::posn());
  for (const auto& t : {SemType::boolean(), SemType::string_any(), SemType::real(), SemType::posn(),
                        SemType::image(), SemType::any(), SemType::string_enum({"x", "y"})}) {
    EXPECT_EQ(parse_type_token(render_type(t)), t) << render_type(t);
  }
}

TEST(Signature, ParsesCommentLines) {
  auto sig = parse_signature_line("; ℝ≥0 ℝ≥0 → ℝ≥0");
  ASSERT_TRUE(sig);
  EXPECT_EQ(sig->params.size(), 2u);
  EXPECT_EQ(sig->result, SemType::nonneg_real());
  EXPECT_EQ(render_signature(*sig), "NonNegReal NonNegReal -> NonNegReal");

  auto rocket = parse_signature_line(";; rocket fuel --> Boolean");
  ASSERT_TRUE(rocket);
  EXPECT_EQ(rocket->params[1], SemType::alias_of("fuel"));

  EXPECT_FALSE(parse_signature_line("; Purpose: a -> b"));
  EXPECT_FALSE(parse_signature_line("; a -> b c"));
  EXPECT_FALSE(parse_signature_line("; a -> b -> c"));
  EXPECT_FALSE(parse_signature_line("; just words"));

  sexpr::CommentBlock block{{"; Purpose: first", "; Posn \"up\"|\"down\" -> Posn"}, {}};
  auto found = parse_signature_comment(block);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->params[1], SemType::string_enum({"up", "down"}));
}

TEST(Signature, InferredFromSamples) {
  auto p = sexpr::parse_program("(define A (* 10 5))\n(define B (* 50 2))\n(define C (* -4 25))\n");
  eval::Evaluator ev;
  auto g = abstraction::generalize({p.definitions[0].body, p.definitions[1].body});
  eval::RngState rng{0};
  std::vector<eval::Value> results{ev.evaluate(p.definitions[0].body, rng),
                                   ev.evaluate(p.definitions[1].body, rng)};
  EXPECT_EQ(render_signature(infer_signature(g, results, ev)), "NonNegReal NonNegReal -> NonNegReal");

  auto g3 = abstraction::generalize({p.definitions[0].body, p.definitions[2].body});
  std::vector<eval::Value> results3{ev.evaluate(p.definitions[0].body, rng),
                                    ev.evaluate(p.definitions[2].body, rng)};
  EXPECT_EQ(render_signature(infer_signature(g3, results3, ev)), "Real NonNegReal -> Real");
}

}  // namespace
}  // namespace recipe::types
