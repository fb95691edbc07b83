#include <gtest/gtest.h>

#include <json.hpp>

#include "eval/test_engine.hpp"
#include "sexpr/parser.hpp"
#include "support/corpus.hpp"

namespace recipe::eval {
namespace {

RunResult run_text(const std::string& text, std::uint64_t seed = 0) {
  return run_program(sexpr::parse_program(text), seed);
}

TEST(TestEngine, AreaCorpusPassesWithFullCoverage) {
  auto r = run_program(testing::load_corpus("rect-area.rkt"), 0);
  EXPECT_EQ(r.tests.total(), 5u);
  EXPECT_TRUE(r.tests.all_passed());
  EXPECT_TRUE(r.coverage.complete());
}

TEST(TestEngine, FailingCheckReportsBothValues) {
  auto r = run_program(testing::load_corpus("rect-area-bad-test.rkt"), 0);
  EXPECT_EQ(r.tests.failed(), 1u);
  const TestRecord& bad = r.tests.records[0];
  EXPECT_EQ(bad.status, TestStatus::Fail);
  EXPECT_EQ(bad.actual, "1000");
  EXPECT_EQ(bad.expected, "50");
  EXPECT_EQ(bad.span.line, 7u);
}

TEST(TestEngine, CheckWithin) {
  auto r = run_text(
      "(check-within (/ 1 3) 0.33 0.01)\n"
      "(check-within (make-posn 1 2) (make-posn 1.05 2) 0.1)\n"
      "(check-within (/ 1 3) 0.3 0.01)\n"
      "(check-within 1 1 -1)\n");
  ASSERT_EQ(r.tests.total(), 4u);
  EXPECT_EQ(r.tests.records[0].status, TestStatus::Pass);
  EXPECT_EQ(r.tests.records[1].status, TestStatus::Pass);
  EXPECT_EQ(r.tests.records[2].status, TestStatus::Fail);
  EXPECT_EQ(r.tests.records[3].status, TestStatus::Error);
}

TEST(TestEngine, CheckRandomReplaysTheSameStream) {
  auto r = run_text(
      "(define (roll n) (+ 1 (random n)))\n"
      "(check-random (roll 6) (+ 1 (random 6)))\n"
      "(check-random (random 100) (random 99))\n",
      7);
  EXPECT_EQ(r.tests.records[0].status, TestStatus::Pass);
  EXPECT_EQ(r.tests.records[1].status, TestStatus::Fail);
}

TEST(TestEngine, ErrorsInTestsAreIsolated) {
  auto r = run_text("(check-expect (/ 1 0) 1)\n(check-expect 1 1)\n");
  EXPECT_EQ(r.tests.records[0].status, TestStatus::Error);
  EXPECT_NE(r.tests.records[0].message.find("division by zero"), std::string::npos);
  EXPECT_EQ(r.tests.records[1].status, TestStatus::Pass);
}

TEST(TestEngine, ErrorInAConstantStopsTheRun) {
  EXPECT_THROW(run_program(testing::load_corpus("draw-world-raw.rkt"), 0), EvalError);
  EXPECT_THROW(run_program(testing::load_corpus("move-rocket-samples-raw.rkt"), 0), EvalError);
}

TEST(TestEngine, MissingLeftTestLeavesTheLeftClauseUncovered) {
  auto p = testing::load_corpus("move-rocket-missing-left.rkt");
  auto r = run_program(p, 0);
  EXPECT_TRUE(r.tests.all_passed());
  ASSERT_EQ(r.coverage.uncovered.size(), 1u);
  EXPECT_EQ(r.coverage.uncovered[0].function, "move-rocket");
  EXPECT_EQ(r.coverage.uncovered[0].text, "(move-rocket-left a-rocket)");
}

TEST(TestEngine, PerTestCoverageIsRecorded) {
  auto p = testing::load_corpus("piecewise.rkt");
  auto r = run_program(p, 0);
  ASSERT_EQ(r.per_test.size(), r.tests.total());
  const sexpr::Definition* f = p.find("f");
  // (f 6) reaches the else answer; (f -3) does not.
  EXPECT_TRUE(r.per_test[4].contains(f->body.else_answer()->id));
  EXPECT_FALSE(r.per_test[2].contains(f->body.else_answer()->id));
}

TEST(TestEngine, JsonReportSchema) {
  auto r = run_program(testing::load_corpus("move-rocket-missing-left.rkt"), 0);
  auto doc = nlohmann::json::parse(report_json(r));
  ASSERT_TRUE(doc["tests"].is_array());
  EXPECT_EQ(doc["tests"][0]["kind"], "check-expect");
  EXPECT_EQ(doc["tests"][0]["status"], "pass");
  EXPECT_TRUE(doc["tests"][0]["line"].is_number());
  EXPECT_EQ(doc["coverage"]["uncovered"][0]["text"], "(move-rocket-left a-rocket)");
  EXPECT_EQ(doc["coverage"]["uncovered"][0]["line"], 75);
  EXPECT_EQ(doc["summary"]["total"], 10);
  EXPECT_EQ(doc["summary"]["passed"], 10);
}

TEST(TestEngine, ReportsAreDeterministic) {
  auto p = testing::load_corpus("draw-world.rkt");
  EXPECT_EQ(report_json(run_program(p, 3)), report_json(run_program(p, 3)));
  EXPECT_EQ(report_text(run_program(p, 3)), report_text(run_program(p, 3)));
}

}  // namespace
}  // namespace recipe::eval
