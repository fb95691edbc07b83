#include "abstraction/synthesize.hpp"

#include <algorithm>
#include <map>

#include "eval/test_engine.hpp"

namespace recipe::abstraction {

using sexpr::DefKind;
using sexpr::Definition;
using sexpr::Expr;
using sexpr::ExprKind;
using types::SemType;
using types::TypeKind;

namespace {

std::string base_name(const SemType& t) {
  switch (t.kind) {
    case TypeKind::NonNegReal:
    case TypeKind::Real: return "n";
    case TypeKind::Posn: return "a-posn";
    case TypeKind::StringEnum:
    case TypeKind::StringAny: return "a-string";
    case TypeKind::Boolean: return "a-boolean";
    case TypeKind::Image: return "an-image";
    case TypeKind::Alias: return "a-" + t.alias;
    default: return "a-value";
  }
}

std::string default_purpose(const std::string& name, const std::vector<Param>& params) {
  std::string out = "To compute " + name + " from the given ";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += i + 1 == params.size() ? " and " : ", ";
    out += params[i].name;
  }
  return out;
}

// An existing test is kept only if its arguments could be passed to the
// synthesized header: same arity, and each argument's type is compatible
// with the parameter's. Tests written for a header with another parameter
// order are dropped rather than carried over broken.
bool fits_header(const Expr& call, const SynthesizedFunction& sf, eval::Evaluator& evaluator) {
  if (call.args.size() != sf.params.size()) return false;
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    try {
      eval::RngState rng{0};
      SemType t = types::type_of(evaluator.evaluate(call.args[i], rng));
      if (types::join(t, sf.params[i].type).kind == TypeKind::Any) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> default_param_names(const std::vector<SemType>& types) {
  std::map<std::string, int> totals;
  for (const auto& t : types) ++totals[base_name(t)];
  std::map<std::string, int> seen;
  std::vector<std::string> names;
  for (const auto& t : types) {
    std::string base = base_name(t);
    int n = ++seen[base];
    if (base == "n" || totals[base] > 1) {
      names.push_back(base + std::to_string(n));
    } else {
      names.push_back(base);
    }
  }
  return names;
}

Definition SynthesizedFunction::definition() const {
  std::vector<std::string> names;
  for (const auto& p : params) names.push_back(p.name);
  return Definition::function(name, std::move(names), body);
}

SynthesizedFunction synthesize(const std::vector<Definition>& samples, eval::Evaluator& evaluator,
                               const SynthesisOptions& options) {
  if (samples.size() < 2) {
    throw InvalidArgument("synthesis needs at least two sample expressions, given " +
                          std::to_string(samples.size()));
  }
  std::vector<Expr> bodies;
  for (const auto& s : samples) bodies.push_back(s.body);
  SynthesizedFunction sf;
  sf.name = options.name;
  sf.samples = samples;
  sf.generalization = generalize(bodies, options.atomic_forms);
  const Generalization& g = sf.generalization;
  if (g.holes.empty()) {
    throw NoDifferenceError("the sample expressions have no differences; define a constant instead");
  }

  std::vector<eval::Value> results;
  for (const auto& s : samples) {
    eval::RngState rng{0};
    results.push_back(evaluator.evaluate(s.body, rng));
  }
  sf.signature = types::infer_signature(g, results, evaluator, options.enum_limit);

  std::vector<std::string> names;
  if (options.param_names) {
    names = *options.param_names;
    if (names.size() != g.holes.size()) {
      throw InvalidArgument("expected " + std::to_string(g.holes.size()) +
                            " parameter names (one per difference), given " +
                            std::to_string(names.size()));
    }
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) throw InvalidArgument("parameter names must be distinct");
  } else {
    names = default_param_names(sf.signature.params);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    sf.params.push_back(Param{names[i], sf.signature.params[i]});
    if (names[i].size() == 1) {
      sf.warnings.push_back("parameter name " + names[i] +
                            " is too short; avoid simplistic names such as k or x");
    }
  }
  sf.body = fill_holes(g.pattern, names);
  sf.purpose = options.purpose ? *options.purpose : default_purpose(sf.name, sf.params);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::vector<Expr> args;
    for (const auto& h : g.holes) args.push_back(h.values[i]);
    sf.variable_tests.push_back(Definition::test(sexpr::TestKind::Expect,
                                                 Expr::make_app(sf.name, std::move(args)),
                                                 Expr::make_var(samples[i].name)));
  }
  return sf;
}

std::vector<Definition> find_samples(const sexpr::Program& program, const std::string& name,
                                     const std::vector<std::string>& explicit_names) {
  std::vector<Definition> out;
  if (!explicit_names.empty()) {
    for (const auto& n : explicit_names) {
      const Definition* d = program.find(n);
      if (!d || d->kind != DefKind::Constant) {
        throw InvalidArgument(n + " is not a constant definition");
      }
      out.push_back(*d);
    }
    return out;
  }

  std::vector<std::string> anchored;
  for (const auto& d : program.definitions) {
    const std::string* fn = d.applied_function();
    if (!fn || *fn != name || d.expected.kind != ExprKind::Var) continue;
    const Definition* c = program.find(d.expected.text);
    if (c && c->kind == DefKind::Constant &&
        std::find(anchored.begin(), anchored.end(), c->name) == anchored.end()) {
      anchored.push_back(c->name);
    }
  }
  if (anchored.size() >= 2) {
    for (const auto& d : program.definitions) {
      if (d.kind == DefKind::Constant &&
          std::find(anchored.begin(), anchored.end(), d.name) != anchored.end()) {
        out.push_back(d);
      }
    }
    return out;
  }

  std::set<std::string> referenced;
  for (const auto& d : program.definitions) {
    if (d.kind == DefKind::Test) continue;
    for (const auto& n : sexpr::referenced_names(d.body)) referenced.insert(n);
  }
  for (const auto& d : program.definitions) {
    if (d.kind == DefKind::Constant && d.body.is_compound() && !referenced.count(d.name)) {
      out.push_back(d);
    }
  }
  return out;
}

SynthesizedFunction synthesize_program(const sexpr::Program& program, const SynthesisOptions& options,
                                       const std::vector<std::string>& sample_names) {
  std::vector<Definition> samples = find_samples(program, options.name, sample_names);
  eval::Evaluator evaluator;
  eval::RngState rng{0};
  eval::load_program(evaluator, program, rng);
  SynthesizedFunction sf = synthesize(samples, evaluator, options);

  std::set<std::string> sample_set;
  for (const auto& s : samples) sample_set.insert(s.name);
  for (const auto& d : program.definitions) {
    if (d.kind != DefKind::Test && !sample_set.count(d.name) && d.name != sf.name) {
      sf.support.push_back(d);
    }
  }
  for (const auto& d : program.definitions) {
    const std::string* fn = d.applied_function();
    if (!fn || *fn != sf.name) continue;
    if (d.expected.kind == ExprKind::Var && sample_set.count(d.expected.text)) continue;
    bool repeats_sample = std::any_of(sf.variable_tests.begin(), sf.variable_tests.end(),
                                      [&](const Definition& t) { return t.actual == d.actual; });
    if (!repeats_sample && fits_header(d.actual, sf, evaluator)) sf.fresh_tests.push_back(d);
  }
  return sf;
}

}  // namespace recipe::abstraction
