#include <gtest/gtest.h>

#include "sexpr/parser.hpp"
#include "sexpr/printer.hpp"
#include "support/corpus.hpp"

namespace recipe::sexpr {
namespace {

TEST(Printer, FlatRendering) {
  EXPECT_EQ(to_string(parse_expr("(cond [(< x 0) (- x)]   [else x])")),
            "(cond [(< x 0) (- x)] [else x])");
  EXPECT_EQ(to_string(parse_expr("(f 0.5 \"a\\\"b\" #t)")), "(f 0.5 \"a\\\"b\" #true)");
  EXPECT_EQ(to_string(Expr::make_app("*", {Expr::make_hole(0), Expr::make_hole(1)})), "(* <h1> <h2>)");
}

TEST(Printer, LongFormsBreakAcrossLines) {
  Expr e = parse_expr(
      "(and (<= (distance-on-x (make-posn 100 340) (make-posn 105 335)) HALF-FUEL-IMG-WIDTH) "
      "(<= (distance-on-y (make-posn 100 340) (make-posn 105 335)) HALF-FUEL-IMG-HEIGHT))");
  std::string text = pretty(e, 2);
  EXPECT_NE(text.find('\n'), std::string::npos);
  for (std::size_t start = 0, nl; start < text.size(); start = nl + 1) {
    nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    EXPECT_LE(nl - start + 2, 80u) << text;
  }
  EXPECT_EQ(parse_expr(text), e);
}

TEST(Printer, DefinitionsAndComments) {
  Program p = parse_program("; Purpose: x\n(define (f a) (+ a 1)) ; note\n");
  EXPECT_EQ(print_program(p), "; Purpose: x\n(define (f a)\n  (+ a 1))  ; note\n");
}

TEST(Printer, CorpusRoundTrip) {
  for (const char* name : {"rect-area.rkt", "eaten.rkt", "move-rocket.rkt", "draw-world.rkt",
                           "piecewise.rkt", "move-rocket-samples-raw.rkt"}) {
    Program p = testing::load_corpus(name);
    std::string once = print_program(p);
    Program q = parse_program(once);
    EXPECT_EQ(q, p) << name;
    EXPECT_EQ(print_program(q), once) << name;
  }
}

TEST(Printer, QuoteString) {
  EXPECT_EQ(quote_string("a\"b\\"), "\"a\\\"b\\\\\"");
  EXPECT_EQ(quote_string("line\nbreak"), "\"line\\nbreak\"");
}

}  // namespace
}  // namespace recipe::sexpr
