#include "checker/recipe_checker.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <json.hpp>

#include "eval/test_engine.hpp"
#include "sexpr/printer.hpp"
#include "types/signature.hpp"

namespace recipe::checker {

using abstraction::Generalization;
using sexpr::DefKind;
using sexpr::Definition;
using sexpr::Expr;
using sexpr::ExprKind;
using types::SemType;

const char* status_name(StepStatus status) {
  switch (status) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Warn: return "warn";
    case StepStatus::Fail: return "fail";
  }
  return "?";
}

const char* step_label(int step) {
  static const char* labels[] = {"sample expressions", "differences", "parameter names",
                                 "signature",          "purpose",     "function header",
                                 "tests",              "body",        "run tests"};
  return step >= 1 && step <= 9 ? labels[step - 1] : "?";
}

bool RecipeReport::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(),
                      [](const StepVerdict& v) { return v.status == StepStatus::Fail; });
}

namespace {

class Audit {
 public:
  Audit(const sexpr::Program& program, const Definition& fn, const CheckConfig& config)
      : program_(program), fn_(fn), config_(config) {
    for (int i = 1; i <= 9; ++i) verdicts_.push_back(StepVerdict{i, StepStatus::Pass, {}});
  }

  std::vector<StepVerdict> run() {
    collect_tests();
    load();
    step1();
    step2();
    step3();
    resolve_mapping();
    step4();
    step5();
    step6();
    step7();
    step8();
    step9();
    return std::move(verdicts_);
  }

 private:
  void fail(int step, std::string message, SourceSpan span) {
    verdicts_[step - 1].diagnostics.push_back({std::move(message), span, true});
    verdicts_[step - 1].status = StepStatus::Fail;
  }

  void warn(int step, std::string message, SourceSpan span) {
    verdicts_[step - 1].diagnostics.push_back({std::move(message), span, false});
    if (verdicts_[step - 1].status == StepStatus::Pass) verdicts_[step - 1].status = StepStatus::Warn;
  }

  static std::string args_text(const std::vector<Expr>& args) {
    std::string out;
    for (const auto& a : args) out += (out.empty() ? "" : " ") + sexpr::to_string(a);
    return out;
  }

  void collect_tests() {
    for (const auto& d : program_.definitions) {
      const std::string* applied = d.applied_function();
      if (applied && *applied == fn_.name) tests_.push_back(&d);
    }
    for (const Definition* t : tests_) {
      if (t->expected.kind != ExprKind::Var) continue;
      const Definition* c = program_.find(t->expected.text);
      if (!c || c->kind != DefKind::Constant) continue;
      if (std::find(family_.begin(), family_.end(), c) == family_.end()) family_.push_back(c);
    }
    std::sort(family_.begin(), family_.end());  // program order: definitions are contiguous
  }

  void load() {
    try {
      eval::RngState rng{config_.seed};
      eval::load_program(evaluator_, program_, rng);
      loaded_ = true;
    } catch (const EvalError& e) {
      load_error_ = e.what();
      load_error_span_ = e.span().value_or(SourceSpan{});
    }
  }

  // 1: at least two non-trivial sample constants anchored by tests.
  void step1() {
    if (family_.size() < 2) {
      fail(1,
           "found " + std::to_string(family_.size()) +
               " sample expression(s); define at least two constants holding sample expressions "
               "and use each as the expected value of a test of " + fn_.name,
           family_.empty() ? fn_.span : family_.front()->span);
    }
    for (const Definition* c : family_) {
      if (!c->body.is_compound()) {
        fail(1,
             c->name + " is a bare literal; a sample expression must show how the value is "
                       "computed",
             c->span);
      }
    }
  }

  // 2: the samples generalize.
  void step2() {
    if (family_.size() < 2) {
      fail(2, "no sample family to compare (see step 1)", fn_.span);
      return;
    }
    std::vector<Expr> bodies;
    for (const Definition* c : family_) bodies.push_back(c->body);
    try {
      gen_ = abstraction::generalize(bodies, config_.atomic_forms);
    } catch (const ShapeError& e) {
      for (const auto& span : e.spans()) fail(2, e.what(), span);
      return;
    }
    if (gen_->holes.empty()) {
      fail(2, "the sample expressions are identical; there are no differences to abstract",
           family_.front()->span);
      gen_.reset();
    }
  }

  // 3: one well-named parameter per difference.
  void step3() {
    if (!gen_) {
      fail(3, "cannot name the differences (see step 2)", fn_.span);
    } else if (fn_.params.size() != gen_->holes.size()) {
      fail(3,
           fn_.name + " has " + std::to_string(fn_.params.size()) + " parameter(s) but the samples "
               "have " + std::to_string(gen_->holes.size()) + " difference(s)",
           fn_.span);
    }
    for (const auto& p : fn_.params) {
      if (p.size() == 1) {
        warn(3, "parameter name " + p + " is too short; avoid simplistic names such as k or x",
             fn_.span);
      }
    }
  }

  void resolve_mapping() {
    if (!gen_) return;
    mapping_ = abstraction::match_template(gen_->pattern, fn_.body, fn_.params);
    if (!mapping_ && fn_.params.size() == gen_->holes.size()) {
      std::vector<std::size_t> identity(gen_->holes.size());
      for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
      order_ = identity;
    } else if (mapping_) {
      order_ = mapping_;
    }
  }

  // Arguments of sample i in header order.
  std::optional<std::vector<Expr>> header_args(std::size_t sample) const {
    if (!gen_ || !order_) return std::nullopt;
    std::vector<Expr> args(fn_.params.size());
    std::vector<bool> filled(fn_.params.size(), false);
    for (std::size_t k = 0; k < gen_->holes.size(); ++k) {
      std::size_t j = (*order_)[k];
      if (j >= args.size()) return std::nullopt;
      args[j] = gen_->holes[k].values[sample];
      filled[j] = true;
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end()) return std::nullopt;
    return args;
  }

  // 4: declared signature admits the inferred one.
  void step4() {
    const auto sig = types::parse_signature_comment(fn_.comments, config_.aliases);
    if (!sig) {
      fail(4, "missing signature comment (e.g. \"; Type1 Type2 -> Type\") above " + fn_.name,
           fn_.span);
      return;
    }
    if (sig->params.size() != fn_.params.size()) {
      fail(4,
           "signature lists " + std::to_string(sig->params.size()) + " parameter type(s) but " +
               fn_.name + " has " + std::to_string(fn_.params.size()) + " parameter(s)",
           fn_.comments.span);
      return;
    }
    if (!gen_ || !order_) return;
    if (!loaded_) {
      fail(4, "cannot infer types, a definition failed to evaluate: " + load_error_, load_error_span_);
      return;
    }
    std::vector<SemType> inferred_params(fn_.params.size(), SemType::never());
    std::vector<eval::Value> results;
    try {
      auto values = types::hole_values(*gen_, evaluator_);
      for (std::size_t k = 0; k < values.size(); ++k) {
        inferred_params[(*order_)[k]] = types::infer_type(values[k], config_.enum_limit);
      }
      for (const Definition* c : family_) {
        eval::RngState rng{config_.seed};
        results.push_back(evaluator_.evaluate(c->body, rng));
      }
    } catch (const EvalError& e) {
      fail(4, std::string("cannot infer types: ") + e.what(), e.span().value_or(fn_.span));
      return;
    }
    SemType inferred_result = types::infer_type(results, config_.enum_limit);

    std::map<std::string, SemType> alias_binding;
    auto check = [&](const SemType& inferred, const SemType& declared, const std::string& what) {
      if (declared.kind == types::TypeKind::Alias) {
        SemType& bound = alias_binding.try_emplace(declared.alias, SemType::never()).first->second;
        SemType joined = types::join(bound, inferred, config_.enum_limit);
        if (joined.kind == types::TypeKind::Any && inferred.kind != types::TypeKind::Any) {
          fail(4,
               "type name " + declared.alias + " is used for both " + types::render_type(bound) +
                   " and " + types::render_type(inferred),
               fn_.comments.span);
        }
        bound = joined;
        return;
      }
      if (!types::subtype(inferred, declared, config_.enum_limit)) {
        fail(4,
             what + ": the samples give " + types::render_type(inferred) +
                 ", which the declared type " + types::render_type(declared) + " does not admit",
             fn_.comments.span);
      }
    };
    for (std::size_t j = 0; j < fn_.params.size(); ++j) {
      check(inferred_params[j], sig->params[j], "parameter " + fn_.params[j]);
    }
    check(inferred_result, sig->result, "result");
  }

  // 5: a purpose statement.
  void step5() {
    for (const auto& line : fn_.comments.lines) {
      std::size_t i = 0;
      while (i < line.size() && (line[i] == ';' || line[i] == ' ' || line[i] == '\t')) ++i;
      std::string rest = line.substr(i, 8);
      std::transform(rest.begin(), rest.end(), rest.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (rest == "purpose:") return;
    }
    fail(5, "missing \"; Purpose:\" statement above " + fn_.name, fn_.span);
  }

  // Collects, per hole, every parameter found at its positions; false when
  // the body does not have the template's shape.
  bool relaxed_match(const Expr& pattern, const Expr& body,
                     std::map<int, std::set<std::string>>& seen) const {
    if (pattern.kind == ExprKind::Hole) {
      if (body.kind != ExprKind::Var ||
          std::find(fn_.params.begin(), fn_.params.end(), body.text) == fn_.params.end()) {
        return false;
      }
      seen[pattern.hole].insert(body.text);
      return true;
    }
    if (pattern.kind != body.kind || pattern.args.size() != body.args.size()) return false;
    if (pattern.kind == ExprKind::App && pattern.text != body.text) return false;
    if (pattern.args.empty()) return pattern == body;
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
      if (!relaxed_match(pattern.args[i], body.args[i], seen)) return false;
    }
    return true;
  }

  // 6: header arity and consistent parameter use.
  void step6() {
    if (gen_ && fn_.params.size() != gen_->holes.size()) {
      fail(6,
           "header of " + fn_.name + " takes " + std::to_string(fn_.params.size()) +
               " parameter(s); step 3 identified " + std::to_string(gen_->holes.size()),
           fn_.span);
    }
    auto used = sexpr::referenced_names(fn_.body);
    for (const auto& p : fn_.params) {
      if (std::find(used.begin(), used.end(), p) == used.end()) {
        fail(6, "parameter " + p + " is never used in the body", fn_.span);
      }
    }
    if (!gen_ || mapping_) return;
    std::map<int, std::set<std::string>> seen;
    if (!relaxed_match(gen_->pattern, fn_.body, seen)) return;
    std::map<std::string, int> owner;
    for (const auto& [hole, params] : seen) {
      if (params.size() > 1) {
        std::string names;
        for (const auto& p : params) names += (names.empty() ? "" : " and ") + p;
        fail(6, "one difference is filled by both " + names + "; use one parameter per difference",
             fn_.body.span);
      }
      for (const auto& p : params) {
        if (auto [it, fresh] = owner.emplace(p, hole); !fresh && it->second != hole) {
          fail(6, "parameter " + p + " stands for two different differences", fn_.body.span);
        }
      }
    }
  }

  // 7: variable-based tests in header order, a fresh-value test, one test per
  // cond clause.
  void step7() {
    if (tests_.empty()) {
      fail(7, "no test applies " + fn_.name, fn_.span);
      return;
    }
    std::vector<std::vector<Expr>> sample_args;
    for (std::size_t i = 0; i < family_.size(); ++i) {
      auto args = header_args(i);
      if (!args) continue;
      sample_args.push_back(*args);
      const Definition* anchor = nullptr;
      bool ok = false;
      for (const Definition* t : tests_) {
        if (t->expected.kind != ExprKind::Var || t->expected.text != family_[i]->name) continue;
        if (!anchor) anchor = t;
        if (t->actual.args == *args) ok = true;
      }
      if (!ok && anchor) {
        fail(7,
             "the test using " + family_[i]->name + " must apply " + fn_.name + " to " +
                 args_text(*args) + " (the values in its sample expression, in header order)",
             anchor->span);
      }
    }

    std::set<std::string> family_names;
    for (const Definition* c : family_) family_names.insert(c->name);
    bool fresh = std::any_of(tests_.begin(), tests_.end(), [&](const Definition* t) {
      if (t->expected.kind == ExprKind::Var && family_names.count(t->expected.text)) return false;
      return std::none_of(sample_args.begin(), sample_args.end(),
                          [&](const std::vector<Expr>& a) { return a == t->actual.args; });
    });
    if (!fresh) {
      fail(7,
           "write at least one test of " + fn_.name +
               " using concrete values that differ from those in the sample expressions",
           tests_.front()->span);
    }

    if (fn_.body.kind != ExprKind::Cond) return;
    if (!run_) {
      fail(7, "cannot tell which cond clauses are tested: " + run_error_, run_error_span_);
      return;
    }
    std::vector<const Expr*> answers;
    for (std::size_t i = 0; i < fn_.body.clause_count(); ++i) answers.push_back(&fn_.body.answer(i));
    if (fn_.body.has_else) answers.push_back(fn_.body.else_answer());
    for (const Expr* answer : answers) {
      bool tested = false;
      for (std::size_t r = 0; r < run_->tests.records.size(); ++r) {
        const Definition& t = program_.definitions[run_->tests.records[r].definition_index];
        const std::string* applied = t.applied_function();
        if (applied && *applied == fn_.name && run_->per_test[r].contains(answer->id)) tested = true;
      }
      if (!tested) {
        fail(7, "no test of " + fn_.name + " exercises the cond clause " +
                    program_.slice(answer->span),
             answer->span);
      }
    }
  }

  // 8: body is the template with parameters for the differences.
  void step8() {
    if (!gen_) {
      fail(8, "cannot check the body without the differences (see step 2)", fn_.span);
      return;
    }
    if (mapping_) return;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < gen_->holes.size(); ++k) {
      std::size_t j = order_ && (*order_)[k] < fn_.params.size() ? (*order_)[k] : k;
      names.push_back(j < fn_.params.size() ? fn_.params[j] : "<h" + std::to_string(k + 1) + ">");
    }
    std::string expected;
    try {
      expected = sexpr::to_string(abstraction::fill_holes(gen_->pattern, names));
    } catch (const std::out_of_range&) {
      expected = sexpr::to_string(gen_->pattern);
    }
    fail(8,
         "the body is not the sample expression with each difference replaced by its parameter; "
         "expected a body like " + expected,
         fn_.body.span);
  }

  // 9: all tests pass and the body is fully covered.
  void step9() {
    if (!run_) {
      fail(9, "the program stopped with an error: " + run_error_, run_error_span_);
      return;
    }
    for (const auto& r : run_->tests.records) {
      if (r.status == eval::TestStatus::Pass) continue;
      std::string what = r.status == eval::TestStatus::Error
                             ? "test raised an error: " + r.message
                             : "test failed: actual value " + r.actual + " differs from " +
                                   r.expected + ", the expected value";
      fail(9, what + " in " + program_.slice(r.span), r.span);
    }
    for (const auto& u : eval::uncovered_in(program_, fn_, run_->coverage.covered)) {
      fail(9, "expression in " + fn_.name + " never evaluated by the tests: " + u.text, u.span);
    }
  }

 public:
  void execute_tests() {
    try {
      run_ = eval::run_program(program_, config_.seed);
    } catch (const EvalError& e) {
      run_error_ = e.what();
      run_error_span_ = e.span().value_or(SourceSpan{});
    }
  }

 private:
  const sexpr::Program& program_;
  const Definition& fn_;
  const CheckConfig& config_;
  std::vector<StepVerdict> verdicts_;

  std::vector<const Definition*> tests_;
  std::vector<const Definition*> family_;
  std::optional<Generalization> gen_;
  std::optional<std::vector<std::size_t>> mapping_;  // strict template match
  std::optional<std::vector<std::size_t>> order_;    // hole -> header position
  eval::Evaluator evaluator_;
  bool loaded_ = false;
  std::string load_error_;
  SourceSpan load_error_span_;
  std::optional<eval::RunResult> run_;
  std::string run_error_;
  SourceSpan run_error_span_;
};

}  // namespace

RecipeReport check_recipe(const sexpr::Program& program, const std::string& function,
                          const CheckConfig& config) {
  const Definition* fn = program.find(function);
  if (!fn || fn->kind != DefKind::Function) {
    throw UnknownFunction(function + " is not a function defined in the program");
  }
  Audit audit(program, *fn, config);
  audit.execute_tests();
  RecipeReport report;
  report.function = function;
  report.verdicts = audit.run();
  return report;
}

std::string report_json(const RecipeReport& report) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& v : report.verdicts) {
    nlohmann::ordered_json diags = nlohmann::ordered_json::array();
    for (const auto& d : v.diagnostics) {
      diags.push_back({{"message", d.message},
                       {"line", d.span.line},
                       {"col", d.span.column},
                       {"severity", d.fatal ? "fail" : "warn"}});
    }
    steps.push_back({{"step", v.step},
                     {"label", step_label(v.step)},
                     {"status", status_name(v.status)},
                     {"diagnostics", std::move(diags)}});
  }
  nlohmann::ordered_json doc;
  doc["function"] = report.function;
  doc["steps"] = std::move(steps);
  doc["overall"] = report.passed() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

std::string report_text(const RecipeReport& report) {
  std::string out = "Design recipe check for " + report.function + ": " +
                    (report.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& v : report.verdicts) {
    std::string status = status_name(v.status);
    std::transform(status.begin(), status.end(), status.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    out += "  [" + status + "] step " + std::to_string(v.step) + " (" + step_label(v.step) + ")\n";
    for (const auto& d : v.diagnostics) {
      out += "         " + std::string(d.fatal ? "" : "warning: ") + d.message + " (line " +
             std::to_string(d.span.line) + ", col " + std::to_string(d.span.column) + ")\n";
    }
  }
  return out;
}

}  // namespace recipe::checker
