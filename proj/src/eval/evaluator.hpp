#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "eval/rng.hpp"
#include "eval/value.hpp"
#include "sexpr/syntax.hpp"
#include "util/error.hpp"

namespace recipe::eval {

using Bindings = std::vector<std::pair<std::string, Value>>;

// Records which expression nodes have started evaluating.
class CoverageSet {
 public:
  void mark(sexpr::NodeId id) {
    if (id == 0) return;
    if (id >= hits_.size()) hits_.resize(id + 1, 0);
    hits_[id] = 1;
  }
  bool contains(sexpr::NodeId id) const { return id < hits_.size() && hits_[id]; }
  std::vector<sexpr::NodeId> ids() const;
  void merge(const CoverageSet& other);

 private:
  std::vector<char> hits_;
};

// Big-step evaluator over a set of global definitions.
//
// Globals are added in program order; function bodies resolve globals at
// call time, so a function may call one defined after it as long as the call
// happens later. Every node is marked covered when its evaluation begins.
class Evaluator {
 public:
  Evaluator() = default;

  void define_function(const sexpr::Definition& def);
  void define_constant(const std::string& name, Value value);

  bool is_function(const std::string& name) const;
  bool is_constant(const std::string& name) const;
  const Value* constant(const std::string& name) const;
  const sexpr::Definition* function(const std::string& name) const;

  Value evaluate(const sexpr::Expr& expr, const Bindings& locals, RngState& rng);
  Value evaluate(const sexpr::Expr& expr, RngState& rng) { return evaluate(expr, {}, rng); }

  // Applies a user function or builtin to already-evaluated arguments.
  Value apply(const std::string& name, std::vector<Value> args, const sexpr::Expr& site,
              RngState& rng);

  const CoverageSet& coverage() const { return coverage_; }
  // Nodes entered are also recorded here until reset with nullptr.
  void set_secondary_coverage(CoverageSet* sink) { secondary_ = sink; }

  static bool is_builtin(const std::string& name);

 private:
  Value eval(const sexpr::Expr& e, const Bindings& locals, RngState& rng);
  Value call_user(const sexpr::Definition& fn, std::vector<Value> args, const sexpr::Expr& site,
                  RngState& rng);

  struct Global {
    std::shared_ptr<const sexpr::Definition> function;
    std::shared_ptr<const Value> constant;
  };

  std::map<std::string, Global, std::less<>> globals_;
  CoverageSet coverage_;
  CoverageSet* secondary_ = nullptr;
  int depth_ = 0;
};

// Evaluates a closed expression (plus `locals`) with builtins only.
std::pair<Value, RngState> evaluate(const sexpr::Expr& expr, const Bindings& locals, RngState rng);

}  // namespace recipe::eval
