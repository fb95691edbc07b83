#include "sexpr/syntax.hpp"

#include <algorithm>

namespace recipe::sexpr {

Expr Expr::make_number(Rational value) {
  Expr e;
  e.kind = ExprKind::Number;
  e.number = std::move(value);
  return e;
}

Expr Expr::make_string(std::string value) {
  Expr e;
  e.kind = ExprKind::String;
  e.text = std::move(value);
  return e;
}

Expr Expr::make_boolean(bool value) {
  Expr e;
  e.kind = ExprKind::Boolean;
  e.boolean = value;
  return e;
}

Expr Expr::make_var(std::string name) {
  Expr e;
  e.kind = ExprKind::Var;
  e.text = std::move(name);
  return e;
}

Expr Expr::make_app(std::string op, std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::App;
  e.text = std::move(op);
  e.args = std::move(args);
  return e;
}

Expr Expr::make_cond(std::vector<std::pair<Expr, Expr>> clauses, std::optional<Expr> else_answer) {
  Expr e;
  e.kind = ExprKind::Cond;
  for (auto& [q, a] : clauses) {
    e.args.push_back(std::move(q));
    e.args.push_back(std::move(a));
  }
  if (else_answer) {
    e.has_else = true;
    e.args.push_back(std::move(*else_answer));
  }
  return e;
}

Expr Expr::make_and(std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::And;
  e.args = std::move(args);
  return e;
}

Expr Expr::make_or(std::vector<Expr> args) {
  Expr e;
  e.kind = ExprKind::Or;
  e.args = std::move(args);
  return e;
}

Expr Expr::make_hole(int index) {
  Expr e;
  e.kind = ExprKind::Hole;
  e.hole = index;
  return e;
}

bool Expr::is_compound() const {
  bool found = false;
  for_each_node(*this, [&](const Expr& n) {
    if (n.kind == ExprKind::App || n.is_special_form()) found = true;
  });
  return found;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number: return a.number == b.number;
    case ExprKind::String:
    case ExprKind::Var: return a.text == b.text;
    case ExprKind::Boolean: return a.boolean == b.boolean;
    case ExprKind::Hole: return a.hole == b.hole;
    case ExprKind::App:
      if (a.text != b.text) return false;
      break;
    case ExprKind::Cond:
      if (a.has_else != b.has_else) return false;
      break;
    case ExprKind::And:
    case ExprKind::Or: break;
  }
  return a.args == b.args;
}

const char* kind_name(ExprKind kind) {
  switch (kind) {
    case ExprKind::Number: return "number";
    case ExprKind::String: return "string";
    case ExprKind::Boolean: return "boolean";
    case ExprKind::Var: return "variable";
    case ExprKind::App: return "application";
    case ExprKind::Cond: return "cond";
    case ExprKind::And: return "and";
    case ExprKind::Or: return "or";
    case ExprKind::Hole: return "hole";
  }
  return "?";
}

const char* test_kind_name(TestKind kind) {
  switch (kind) {
    case TestKind::Expect: return "check-expect";
    case TestKind::Within: return "check-within";
    case TestKind::Random: return "check-random";
  }
  return "?";
}

Definition Definition::constant(std::string name, Expr body) {
  Definition d;
  d.kind = DefKind::Constant;
  d.name = std::move(name);
  d.body = std::move(body);
  return d;
}

Definition Definition::function(std::string name, std::vector<std::string> params, Expr body) {
  Definition d;
  d.kind = DefKind::Function;
  d.name = std::move(name);
  d.params = std::move(params);
  d.body = std::move(body);
  return d;
}

Definition Definition::test(TestKind kind, Expr actual, Expr expected, std::optional<Expr> tolerance) {
  Definition d;
  d.kind = DefKind::Test;
  d.test_kind = kind;
  d.actual = std::move(actual);
  d.expected = std::move(expected);
  d.tolerance = std::move(tolerance);
  return d;
}

const std::string* Definition::applied_function() const {
  if (kind != DefKind::Test || actual.kind != ExprKind::App) return nullptr;
  return &actual.text;
}

bool equal_ignoring_comments(const Definition& a, const Definition& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case DefKind::Constant: return a.name == b.name && a.body == b.body;
    case DefKind::Function: return a.name == b.name && a.params == b.params && a.body == b.body;
    case DefKind::Test:
      return a.test_kind == b.test_kind && a.actual == b.actual && a.expected == b.expected &&
             a.tolerance == b.tolerance;
  }
  return false;
}

bool operator==(const Definition& a, const Definition& b) {
  return equal_ignoring_comments(a, b) && a.comments == b.comments &&
         a.trailing_comment == b.trailing_comment;
}

const Definition* Program::find(const std::string& name) const {
  for (const auto& d : definitions) {
    if (d.kind != DefKind::Test && d.name == name) return &d;
  }
  return nullptr;
}

std::string Program::slice(const SourceSpan& span) const {
  if (span.end > source.size() || span.begin > span.end) return {};
  return source.substr(span.begin, span.end - span.begin);
}

bool operator==(const Program& a, const Program& b) {
  return a.definitions == b.definitions && a.free_comments == b.free_comments;
}

bool equal_ignoring_comments(const Program& a, const Program& b) {
  return std::equal(a.definitions.begin(), a.definitions.end(), b.definitions.begin(),
                    b.definitions.end(),
                    [](const Definition& x, const Definition& y) {
                      return equal_ignoring_comments(x, y);
                    });
}

std::vector<std::string> referenced_names(const Expr& e) {
  std::vector<std::string> names;
  for_each_node(e, [&](const Expr& n) {
    if (n.kind == ExprKind::Var || n.kind == ExprKind::App) {
      if (std::find(names.begin(), names.end(), n.text) == names.end()) names.push_back(n.text);
    }
  });
  return names;
}

}  // namespace recipe::sexpr
