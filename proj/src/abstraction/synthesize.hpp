#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "abstraction/generalize.hpp"
#include "eval/evaluator.hpp"
#include "sexpr/syntax.hpp"
#include "types/signature.hpp"

namespace recipe::abstraction {

struct Param {
  std::string name;
  types::SemType type;
};

struct SynthesizedFunction {
  std::string name;
  std::vector<Param> params;  // hole order (first occurrence)
  std::string purpose;
  sexpr::Expr body;
  std::vector<sexpr::Definition> variable_tests;
  std::vector<sexpr::Definition> fresh_tests;

  std::vector<sexpr::Definition> samples;  // the Step-1 constants
  std::vector<sexpr::Definition> support;  // helpers the samples depend on
  Generalization generalization;
  types::Signature signature;
  std::vector<std::string> warnings;

  sexpr::Definition definition() const;
};

struct SynthesisOptions {
  std::string name;
  std::optional<std::vector<std::string>> param_names;
  std::set<std::string> atomic_forms = kDefaultAtomicForms;
  std::optional<std::string> purpose;
  std::size_t enum_limit = types::kDefaultEnumLimit;
};

// Builds a function from Step-1 constant definitions. `evaluator` must
// already hold every global the samples refer to.
//
// Throws ShapeError, NoDifferenceError (zero holes), InvalidArgument (fewer
// than two samples, wrong number of parameter names) and EvalError.
SynthesizedFunction synthesize(const std::vector<sexpr::Definition>& samples,
                               eval::Evaluator& evaluator, const SynthesisOptions& options);

// Which constants of `program` form the sample family for `name`:
//   1. `explicit_names` when given;
//   2. otherwise constants used as expected values of tests applying `name`;
//   3. otherwise non-literal constants no other definition refers to.
std::vector<sexpr::Definition> find_samples(const sexpr::Program& program, const std::string& name,
                                            const std::vector<std::string>& explicit_names = {});

// Whole-file synthesis: picks samples, loads the program, and carries over
// supporting definitions (minus any existing definition of `name`) and any existing tests of `name` that use values
// other than the samples' as fresh-value tests.
SynthesizedFunction synthesize_program(const sexpr::Program& program, const SynthesisOptions& options,
                                       const std::vector<std::string>& sample_names = {});

// Default parameter names derived from types: n1, n2 for numbers, a-posn,
// a-string, ... with numeric suffixes when a base repeats.
std::vector<std::string> default_param_names(const std::vector<types::SemType>& types);

// Emits, in order: supporting definitions, Step-1 constants, tests
// (variable-based then fresh-value), a TODO comment when there are no
// fresh-value tests, then signature and purpose comments and the function.
std::string generate_scaffold(const SynthesizedFunction& sf, const types::Signature& signature);

}  // namespace recipe::abstraction
