#include "sexpr/printer.hpp"

namespace recipe::sexpr {
namespace {

constexpr std::size_t kWidth = 80;

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool fits(const std::string& flat, std::size_t indent, std::size_t width) {
  return flat.find('\n') == std::string::npos && indent + display_width(flat) <= width;
}

std::string spaces(std::size_t n) { return std::string(n, ' '); }

// Operands stacked under the first one: (op a\n    b\n    c)
std::string stacked(const std::string& head, const std::vector<const Expr*>& operands,
                    std::size_t indent, std::size_t width) {
  std::string out = "(" + head;
  std::size_t column = indent + 1 + display_width(head) + 1;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    out += i == 0 ? " " : "\n" + spaces(column);
    out += pretty(*operands[i], column, width);
  }
  return out + ")";
}

}  // namespace

std::string quote_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return format_number(e.number);
    case ExprKind::String: return quote_string(e.text);
    case ExprKind::Boolean: return e.boolean ? "#true" : "#false";
    case ExprKind::Var: return e.text;
    case ExprKind::Hole: return "<h" + std::to_string(e.hole + 1) + ">";
    case ExprKind::App:
    case ExprKind::And:
    case ExprKind::Or: {
      std::string out = "(" + (e.kind == ExprKind::App ? e.text : e.kind == ExprKind::And ? "and" : "or");
      for (const auto& a : e.args) out += " " + to_string(a);
      return out + ")";
    }
    case ExprKind::Cond: {
      std::string out = "(cond";
      for (std::size_t i = 0; i < e.clause_count(); ++i) {
        out += " [" + to_string(e.question(i)) + " " + to_string(e.answer(i)) + "]";
      }
      if (e.has_else) out += " [else " + to_string(*e.else_answer()) + "]";
      return out + ")";
    }
  }
  return {};
}

std::string pretty(const Expr& e, std::size_t indent, std::size_t width) {
  std::string flat = to_string(e);
  if (fits(flat, indent, width)) return flat;
  switch (e.kind) {
    case ExprKind::App:
    case ExprKind::And:
    case ExprKind::Or: {
      std::vector<const Expr*> operands;
      for (const auto& a : e.args) operands.push_back(&a);
      std::string head = e.kind == ExprKind::App ? e.text : e.kind == ExprKind::And ? "and" : "or";
      return stacked(head, operands, indent, width);
    }
    case ExprKind::Cond: {
      std::string out = "(cond ";
      std::size_t column = indent + 6;
      auto clause = [&](const std::string& q_text, const Expr* q, const Expr& a) {
        std::string q_str = q ? pretty(*q, column + 1, width) : q_text;
        std::string one = "[" + q_str + " " + to_string(a) + "]";
        if (fits(one, column, width)) return one;
        return "[" + q_str + "\n" + spaces(column + 1) + pretty(a, column + 1, width) + "]";
      };
      for (std::size_t i = 0; i < e.clause_count(); ++i) {
        if (i > 0) out += "\n" + spaces(column);
        out += clause({}, &e.question(i), e.answer(i));
      }
      if (e.has_else) out += "\n" + spaces(column) + clause("else", nullptr, *e.else_answer());
      return out + ")";
    }
    default: return flat;
  }
}

std::string print_definition(const Definition& d) {
  std::string out;
  for (const auto& line : d.comments.lines) out += line + "\n";
  std::string form;
  switch (d.kind) {
    case DefKind::Constant: {
      std::string head = "(define " + d.name;
      std::string flat = head + " " + to_string(d.body) + ")";
      form = fits(flat, 0, kWidth) ? flat : head + "\n  " + pretty(d.body, 2, kWidth) + ")";
      break;
    }
    case DefKind::Function: {
      std::string header = "(define (" + d.name;
      for (const auto& p : d.params) header += " " + p;
      form = header + ")\n  " + pretty(d.body, 2, kWidth) + ")";
      break;
    }
    case DefKind::Test: {
      std::vector<const Expr*> operands{&d.actual, &d.expected};
      if (d.tolerance) operands.push_back(&*d.tolerance);
      std::string flat = "(" + std::string(test_kind_name(d.test_kind));
      for (const auto* o : operands) flat += " " + to_string(*o);
      flat += ")";
      form = fits(flat, 0, kWidth) ? flat : stacked(test_kind_name(d.test_kind), operands, 0, kWidth);
      break;
    }
  }
  out += form;
  if (d.trailing_comment) out += "  " + *d.trailing_comment;
  return out + "\n";
}

std::string print_program(const Program& p) {
  std::string out;
  auto emit_free = [&](std::size_t index) {
    for (const auto& fc : p.free_comments) {
      if (fc.before != index) continue;
      if (!out.empty()) out += "\n";
      for (const auto& line : fc.block.lines) out += line + "\n";
    }
  };
  for (std::size_t i = 0; i < p.definitions.size(); ++i) {
    emit_free(i);
    const Definition& d = p.definitions[i];
    bool separate = !out.empty() && (!d.comments.empty() || d.kind == DefKind::Function ||
                                     (i > 0 && p.definitions[i - 1].kind != d.kind));
    bool after_free = false;
    for (const auto& fc : p.free_comments) after_free = after_free || fc.before == i;
    if (separate || after_free) out += "\n";
    out += print_definition(d);
  }
  emit_free(p.definitions.size());
  return out;
}

}  // namespace recipe::sexpr
