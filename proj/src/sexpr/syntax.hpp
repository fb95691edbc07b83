#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "util/rational.hpp"
#include "util/source_span.hpp"

namespace recipe::sexpr {

using NodeId = std::uint32_t;

enum class ExprKind { Number, String, Boolean, Var, App, Cond, And, Or, Hole };

// One node of the teaching-language expression tree.
//
// Cond stores its clauses flattened in `args` as question/answer pairs,
// followed by the else answer when `has_else` is set. `hole` is only used by
// generalization templates and never produced by the parser.
struct Expr {
  ExprKind kind = ExprKind::Number;
  Rational number;
  std::string text;  // string literal, variable name or operator name
  bool boolean = false;
  int hole = -1;
  bool has_else = false;
  std::vector<Expr> args;
  SourceSpan span;
  NodeId id = 0;

  static Expr make_number(Rational value);
  static Expr make_string(std::string value);
  static Expr make_boolean(bool value);
  static Expr make_var(std::string name);
  static Expr make_app(std::string op, std::vector<Expr> args);
  static Expr make_cond(std::vector<std::pair<Expr, Expr>> clauses,
                        std::optional<Expr> else_answer);
  static Expr make_and(std::vector<Expr> args);
  static Expr make_or(std::vector<Expr> args);
  static Expr make_hole(int index);

  std::size_t clause_count() const { return (args.size() - (has_else ? 1 : 0)) / 2; }
  const Expr& question(std::size_t i) const { return args[2 * i]; }
  const Expr& answer(std::size_t i) const { return args[2 * i + 1]; }
  const Expr* else_answer() const { return has_else ? &args.back() : nullptr; }

  bool is_literal() const {
    return kind == ExprKind::Number || kind == ExprKind::String || kind == ExprKind::Boolean;
  }
  bool is_special_form() const {
    return kind == ExprKind::Cond || kind == ExprKind::And || kind == ExprKind::Or;
  }
  // App, Cond, And or Or anywhere in the tree.
  bool is_compound() const;
};

// Structural equality: spans and node ids are ignored, numbers compare exactly.
bool operator==(const Expr& a, const Expr& b);

const char* kind_name(ExprKind kind);

struct CommentBlock {
  std::vector<std::string> lines;  // each line including its leading ';'
  SourceSpan span;

  bool empty() const { return lines.empty(); }
  friend bool operator==(const CommentBlock& a, const CommentBlock& b) {
    return a.lines == b.lines;
  }
};

enum class DefKind { Constant, Function, Test };
enum class TestKind { Expect, Within, Random };

const char* test_kind_name(TestKind kind);

struct Definition {
  DefKind kind = DefKind::Constant;
  std::string name;                 // Constant/Function
  std::vector<std::string> params;  // Function
  Expr body;                        // Constant/Function
  TestKind test_kind = TestKind::Expect;
  Expr actual;                      // Test
  Expr expected;                    // Test
  std::optional<Expr> tolerance;    // Test, Within only
  CommentBlock comments;
  std::optional<std::string> trailing_comment;
  SourceSpan span;

  static Definition constant(std::string name, Expr body);
  static Definition function(std::string name, std::vector<std::string> params, Expr body);
  static Definition test(TestKind kind, Expr actual, Expr expected,
                         std::optional<Expr> tolerance = std::nullopt);

  // For a test whose actual operand applies a named function.
  const std::string* applied_function() const;
};

bool operator==(const Definition& a, const Definition& b);
bool equal_ignoring_comments(const Definition& a, const Definition& b);

// A comment run not attached to any definition; printed before
// definitions[before] (or at the end when before == definitions.size()).
struct FreeComment {
  CommentBlock block;
  std::size_t before = 0;
  friend bool operator==(const FreeComment&, const FreeComment&) = default;
};

struct Program {
  std::vector<Definition> definitions;
  std::vector<FreeComment> free_comments;
  std::string source;

  const Definition* find(const std::string& name) const;
  std::string slice(const SourceSpan& span) const;
};

// Definitions and comments; the source text is not compared.
bool operator==(const Program& a, const Program& b);
bool equal_ignoring_comments(const Program& a, const Program& b);

// Pre-order visit of every node in `e`.
template <class F>
void for_each_node(const Expr& e, F&& f) {
  f(e);
  for (const auto& child : e.args) for_each_node(child, f);
}

// Names referenced as variables or operators anywhere in `e`.
std::vector<std::string> referenced_names(const Expr& e);

}  // namespace recipe::sexpr
