#include "eval/evaluator.hpp"

#include <functional>
#include <unordered_map>

namespace recipe::eval {

using sexpr::Definition;
using sexpr::Expr;
using sexpr::ExprKind;

namespace {

constexpr int kMaxDepth = 2000;

const char* ordinal(std::size_t i) {
  static const char* names[] = {"first", "second", "third", "fourth", "fifth", "sixth"};
  return i < 6 ? names[i] : "next";
}

struct Args {
  const std::string& op;
  const std::vector<Value>& values;
  const Expr& site;

  [[noreturn]] void mismatch(std::size_t i, const char* wanted) const {
    std::string msg = op + ": expects " + wanted;
    if (values.size() > 1) msg += std::string(" as ") + ordinal(i) + " argument";
    msg += ", given " + render(values[i]);
    throw EvalError(msg, site.span);
  }

  const Rational& number(std::size_t i) const {
    if (!values[i].is_number()) mismatch(i, "a number");
    return values[i].as_number();
  }
  const Rational& nonneg(std::size_t i) const {
    const Rational& n = number(i);
    if (n < 0) mismatch(i, "a non-negative number");
    return n;
  }
  const std::string& string(std::size_t i) const {
    if (!values[i].is_string()) mismatch(i, "a string");
    return values[i].as_string();
  }
  bool boolean(std::size_t i) const {
    if (!values[i].is_boolean()) mismatch(i, "a boolean");
    return values[i].as_boolean();
  }
  const Posn& posn(std::size_t i) const {
    if (!values[i].is_posn()) mismatch(i, "a posn");
    return values[i].as_posn();
  }
  ImagePtr image(std::size_t i) const {
    if (!values[i].is_image()) mismatch(i, "an image");
    return std::get<ImagePtr>(values[i].data);
  }
  const World& world(std::size_t i) const {
    if (!values[i].is_world()) mismatch(i, "a world");
    return values[i].as_world();
  }
  std::string mode(std::size_t i) const {
    const std::string& m = string(i);
    if (m != "solid" && m != "outline") mismatch(i, "a mode (\"solid\" or \"outline\")");
    return m;
  }
};

struct Builtin {
  std::size_t min_args;
  std::size_t max_args;  // SIZE_MAX for variadic
  std::function<Value(const Args&, RngState&)> fn;
};

template <class Cmp>
Value compare_chain(const Args& a, Cmp cmp) {
  bool result = true;
  for (std::size_t i = 0; i < a.values.size(); ++i) a.number(i);
  for (std::size_t i = 0; i + 1 < a.values.size(); ++i) {
    if (!cmp(a.number(i), a.number(i + 1))) result = false;
  }
  return Value::boolean(result);
}

std::shared_ptr<const Value> boxed(const Value& v) { return std::make_shared<const Value>(v); }

const std::unordered_map<std::string, Builtin>& builtins() {
  static const std::unordered_map<std::string, Builtin> table = [] {
    constexpr std::size_t many = SIZE_MAX;
    std::unordered_map<std::string, Builtin> t;
    t["+"] = {2, many, [](const Args& a, RngState&) {
                Rational sum = 0;
                for (std::size_t i = 0; i < a.values.size(); ++i) sum += a.number(i);
                return Value::number(sum);
              }};
    t["*"] = {2, many, [](const Args& a, RngState&) {
                Rational product = 1;
                for (std::size_t i = 0; i < a.values.size(); ++i) product *= a.number(i);
                return Value::number(product);
              }};
    t["-"] = {1, many, [](const Args& a, RngState&) {
                if (a.values.size() == 1) return Value::number(-a.number(0));
                Rational r = a.number(0);
                for (std::size_t i = 1; i < a.values.size(); ++i) r -= a.number(i);
                return Value::number(r);
              }};
    t["/"] = {1, many, [](const Args& a, RngState&) {
                for (std::size_t i = 0; i < a.values.size(); ++i) a.number(i);
                auto divide = [&](const Rational& x, const Rational& y) {
                  if (y == 0) throw EvalError("/: division by zero", a.site.span);
                  return Rational(x / y);
                };
                if (a.values.size() == 1) return Value::number(divide(1, a.number(0)));
                Rational r = a.number(0);
                for (std::size_t i = 1; i < a.values.size(); ++i) r = divide(r, a.number(i));
                return Value::number(r);
              }};
    t["abs"] = {1, 1, [](const Args& a, RngState&) {
                  const Rational& n = a.number(0);
                  return Value::number(n < 0 ? Rational(-n) : n);
                }};
    t["min"] = {1, many, [](const Args& a, RngState&) {
                  Rational m = a.number(0);
                  for (std::size_t i = 1; i < a.values.size(); ++i) m = std::min(m, a.number(i));
                  return Value::number(m);
                }};
    t["max"] = {1, many, [](const Args& a, RngState&) {
                  Rational m = a.number(0);
                  for (std::size_t i = 1; i < a.values.size(); ++i) m = std::max(m, a.number(i));
                  return Value::number(m);
                }};
    t["sqr"] = {1, 1, [](const Args& a, RngState&) {
                  return Value::number(a.number(0) * a.number(0));
                }};
    t["expt"] = {2, 2, [](const Args& a, RngState&) {
                   const Rational& base = a.number(0);
                   const Rational& exponent = a.number(1);
                   if (!is_integer(exponent)) {
                     throw EvalError("expt: only integer exponents are supported (exact arithmetic)",
                                     a.site.span);
                   }
                   BigInt e = boost::multiprecision::numerator(exponent);
                   bool negative = e < 0;
                   if (negative) e = -e;
                   if (e > 100000) throw EvalError("expt: exponent too large", a.site.span);
                   if (negative && base == 0) throw EvalError("expt: division by zero", a.site.span);
                   Rational r = 1;
                   for (BigInt i = 0; i < e; ++i) r *= base;
                   return Value::number(negative ? Rational(1 / r) : r);
                 }};
    t["<"] = {2, many, [](const Args& a, RngState&) {
                return compare_chain(a, [](const Rational& x, const Rational& y) { return x < y; });
              }};
    t["<="] = {2, many, [](const Args& a, RngState&) {
                 return compare_chain(a, [](const Rational& x, const Rational& y) { return x <= y; });
               }};
    t[">"] = {2, many, [](const Args& a, RngState&) {
                return compare_chain(a, [](const Rational& x, const Rational& y) { return x > y; });
              }};
    t[">="] = {2, many, [](const Args& a, RngState&) {
                 return compare_chain(a, [](const Rational& x, const Rational& y) { return x >= y; });
               }};
    t["="] = {2, many, [](const Args& a, RngState&) {
                return compare_chain(a, [](const Rational& x, const Rational& y) { return x == y; });
              }};
    t["string=?"] = {2, many, [](const Args& a, RngState&) {
                       bool same = true;
                       for (std::size_t i = 0; i < a.values.size(); ++i) {
                         if (a.string(i) != a.string(0)) same = false;
                       }
                       return Value::boolean(same);
                     }};
    t["not"] = {1, 1, [](const Args& a, RngState&) { return Value::boolean(!a.boolean(0)); }};
    t["make-posn"] = {2, 2, [](const Args& a, RngState&) {
                        return Value::posn(a.number(0), a.number(1));
                      }};
    t["posn-x"] = {1, 1, [](const Args& a, RngState&) { return Value::number(a.posn(0).x); }};
    t["posn-y"] = {1, 1, [](const Args& a, RngState&) { return Value::number(a.posn(0).y); }};
    t["random"] = {1, 1, [](const Args& a, RngState& rng) {
                     const Rational& n = a.number(0);
                     if (!is_integer(n) || n <= 0) a.mismatch(0, "a positive integer");
                     return Value::number(Rational(rng.below(boost::multiprecision::numerator(n))));
                   }};
    t["rectangle"] = {4, 4, [](const Args& a, RngState&) {
                        return Value::image(make_image(
                            {RectImage{a.nonneg(0), a.nonneg(1), a.mode(2), a.string(3)}}));
                      }};
    t["circle"] = {3, 3, [](const Args& a, RngState&) {
                     return Value::image(make_image({CircleImage{a.nonneg(0), a.mode(1), a.string(2)}}));
                   }};
    t["empty-scene"] = {2, 2, [](const Args& a, RngState&) {
                          return Value::image(make_image({EmptyScene{a.nonneg(0), a.nonneg(1)}}));
                        }};
    t["rotate"] = {2, 2, [](const Args& a, RngState&) {
                     return Value::image(make_image({RotateImage{a.number(0), a.image(1)}}));
                   }};
    t["place-image"] = {4, 4, [](const Args& a, RngState&) {
                          return Value::image(make_image(
                              {PlaceImage{a.image(0), a.number(1), a.number(2), a.image(3)}}));
                        }};
    t["image-width"] = {1, 1, [](const Args& a, RngState&) {
                          return Value::number(a.image(0)->width());
                        }};
    t["image-height"] = {1, 1, [](const Args& a, RngState&) {
                           return Value::number(a.image(0)->height());
                         }};
    t["make-world"] = {5, 5, [](const Args& a, RngState&) {
                         a.posn(0);
                         a.string(1);
                         a.nonneg(2);
                         a.posn(3);
                         a.posn(4);
                         return Value{World{boxed(a.values[0]), boxed(a.values[1]), boxed(a.values[2]),
                                            boxed(a.values[3]), boxed(a.values[4])}};
                       }};
    t["world-rocket"] = {1, 1, [](const Args& a, RngState&) { return *a.world(0).rocket; }};
    t["world-dir"] = {1, 1, [](const Args& a, RngState&) { return *a.world(0).dir; }};
    t["world-flevel"] = {1, 1, [](const Args& a, RngState&) { return *a.world(0).flevel; }};
    t["world-gfuel"] = {1, 1, [](const Args& a, RngState&) { return *a.world(0).gfuel; }};
    t["world-bfuel"] = {1, 1, [](const Args& a, RngState&) { return *a.world(0).bfuel; }};
    return t;
  }();
  return table;
}

std::string arity_message(const std::string& op, std::size_t min, std::size_t max, std::size_t given) {
  std::string expected;
  if (min == max) {
    expected = std::to_string(min) + (min == 1 ? " argument" : " arguments");
  } else if (max == SIZE_MAX) {
    expected = "at least " + std::to_string(min) + (min == 1 ? " argument" : " arguments");
  } else {
    expected = std::to_string(min) + " to " + std::to_string(max) + " arguments";
  }
  return op + ": expects " + expected + ", but found " + std::to_string(given);
}

class DepthGuard {
 public:
  DepthGuard(int& depth, const Expr& site) : depth_(depth) {
    if (++depth_ > kMaxDepth) {
      --depth_;
      throw EvalError("maximum call depth exceeded (infinite recursion?)", site.span);
    }
  }
  ~DepthGuard() { --depth_; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;

 private:
  int& depth_;
};

}  // namespace

std::vector<sexpr::NodeId> CoverageSet::ids() const {
  std::vector<sexpr::NodeId> out;
  for (std::size_t i = 0; i < hits_.size(); ++i) {
    if (hits_[i]) out.push_back(static_cast<sexpr::NodeId>(i));
  }
  return out;
}

void CoverageSet::merge(const CoverageSet& other) {
  if (other.hits_.size() > hits_.size()) hits_.resize(other.hits_.size(), 0);
  for (std::size_t i = 0; i < other.hits_.size(); ++i) hits_[i] |= other.hits_[i];
}

bool Evaluator::is_builtin(const std::string& name) { return builtins().count(name) > 0; }

void Evaluator::define_function(const Definition& def) {
  globals_[def.name] = Global{std::make_shared<const Definition>(def), nullptr};
}

void Evaluator::define_constant(const std::string& name, Value value) {
  globals_[name] = Global{nullptr, std::make_shared<const Value>(std::move(value))};
}

bool Evaluator::is_function(const std::string& name) const {
  auto it = globals_.find(name);
  return it != globals_.end() && it->second.function;
}

bool Evaluator::is_constant(const std::string& name) const {
  auto it = globals_.find(name);
  return it != globals_.end() && it->second.constant;
}

const Value* Evaluator::constant(const std::string& name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : it->second.constant.get();
}

const Definition* Evaluator::function(const std::string& name) const {
  auto it = globals_.find(name);
  return it == globals_.end() ? nullptr : it->second.function.get();
}

Value Evaluator::evaluate(const Expr& expr, const Bindings& locals, RngState& rng) {
  return eval(expr, locals, rng);
}

Value Evaluator::eval(const Expr& e, const Bindings& locals, RngState& rng) {
  coverage_.mark(e.id);
  if (secondary_) secondary_->mark(e.id);
  switch (e.kind) {
    case ExprKind::Number: return Value::number(e.number);
    case ExprKind::String: return Value::string(e.text);
    case ExprKind::Boolean: return Value::boolean(e.boolean);
    case ExprKind::Hole: throw EvalError("cannot evaluate a template hole", e.span);
    case ExprKind::Var: {
      for (auto it = locals.rbegin(); it != locals.rend(); ++it) {
        if (it->first == e.text) return it->second;
      }
      auto g = globals_.find(e.text);
      if (g != globals_.end() && g->second.constant) return *g->second.constant;
      if ((g != globals_.end() && g->second.function) || is_builtin(e.text)) {
        throw EvalError(e.text + ": expected a function call, but there is no open parenthesis "
                                 "before this function",
                        e.span);
      }
      throw EvalError(e.text + ": this variable is not defined", e.span);
    }
    case ExprKind::And:
    case ExprKind::Or: {
      bool is_and = e.kind == ExprKind::And;
      for (const auto& arg : e.args) {
        Value v = eval(arg, locals, rng);
        if (!v.is_boolean()) {
          throw EvalError(std::string(is_and ? "and" : "or") +
                              ": question result is not true or false: " + render(v),
                          arg.span);
        }
        if (v.as_boolean() != is_and) return Value::boolean(!is_and);
      }
      return Value::boolean(is_and);
    }
    case ExprKind::Cond: {
      for (std::size_t i = 0; i < e.clause_count(); ++i) {
        Value q = eval(e.question(i), locals, rng);
        if (!q.is_boolean()) {
          throw EvalError("cond: question result is not true or false: " + render(q),
                          e.question(i).span);
        }
        if (q.as_boolean()) return eval(e.answer(i), locals, rng);
      }
      if (e.has_else) return eval(*e.else_answer(), locals, rng);
      throw EvalError("cond: all question results were false", e.span);
    }
    case ExprKind::App: {
      for (const auto& [name, value] : locals) {
        if (name == e.text) {
          throw EvalError(e.text + ": this parameter is not a function", e.span);
        }
      }
      std::vector<Value> args;
      args.reserve(e.args.size());
      for (const auto& arg : e.args) args.push_back(eval(arg, locals, rng));
      return apply(e.text, std::move(args), e, rng);
    }
  }
  throw EvalError("unknown expression", e.span);
}

Value Evaluator::apply(const std::string& name, std::vector<Value> args, const Expr& site,
                       RngState& rng) {
  auto g = globals_.find(name);
  if (g != globals_.end()) {
    if (g->second.function) return call_user(*g->second.function, std::move(args), site, rng);
    throw EvalError(name + ": this is a constant, not a function", site.span);
  }
  auto b = builtins().find(name);
  if (b == builtins().end()) throw EvalError(name + ": this function is not defined", site.span);
  const Builtin& builtin = b->second;
  if (args.size() < builtin.min_args || args.size() > builtin.max_args) {
    throw EvalError(arity_message(name, builtin.min_args, builtin.max_args, args.size()), site.span);
  }
  return builtin.fn(Args{name, args, site}, rng);
}

Value Evaluator::call_user(const Definition& fn, std::vector<Value> args, const Expr& site,
                           RngState& rng) {
  if (args.size() != fn.params.size()) {
    throw EvalError(arity_message(fn.name, fn.params.size(), fn.params.size(), args.size()),
                    site.span);
  }
  DepthGuard guard(depth_, site);
  Bindings frame;
  frame.reserve(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) frame.emplace_back(fn.params[i], std::move(args[i]));
  return eval(fn.body, frame, rng);
}

std::pair<Value, RngState> evaluate(const Expr& expr, const Bindings& locals, RngState rng) {
  Evaluator evaluator;
  Value v = evaluator.evaluate(expr, locals, rng);
  return {std::move(v), rng};
}

}  // namespace recipe::eval
