#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "abstraction/generalize.hpp"
#include "sexpr/syntax.hpp"
#include "types/sem_type.hpp"

namespace recipe::checker {

enum class StepStatus { Pass, Warn, Fail };

const char* status_name(StepStatus status);

struct Diagnostic {
  std::string message;
  SourceSpan span;
  bool fatal = true;  // false: warning only
};

struct StepVerdict {
  int step = 0;
  StepStatus status = StepStatus::Pass;
  std::vector<Diagnostic> diagnostics;
};

struct RecipeReport {
  std::string function;
  std::vector<StepVerdict> verdicts;  // steps 1..9 in order

  bool passed() const;
  const StepVerdict& step(int n) const { return verdicts.at(n - 1); }
};

struct CheckConfig {
  std::uint64_t seed = 0;
  std::set<std::string> atomic_forms = abstraction::kDefaultAtomicForms;
  types::AliasMap aliases;
  std::size_t enum_limit = types::kDefaultEnumLimit;
};

// Audits the design of `function` in `program`, one verdict per recipe step.
// The sample family is the set of constants used as expected values of tests
// that apply `function`. Throws UnknownFunction when `function` is not a
// function definition of the program.
RecipeReport check_recipe(const sexpr::Program& program, const std::string& function,
                          const CheckConfig& config = {});

// Short label for a step number, e.g. 1 -> "sample expressions".
const char* step_label(int step);

// {function, steps:[{step,status,diagnostics:[{message,line,col}]}], overall}
std::string report_json(const RecipeReport& report);
std::string report_text(const RecipeReport& report);

}  // namespace recipe::checker
