#include "sexpr/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace recipe::sexpr {
namespace {

// Generic s-expression read before forms are interpreted.
struct Datum {
  enum class Kind { Atom, String, List } kind = Kind::Atom;
  std::string text;
  char open = '(';
  std::vector<Datum> items;
  SourceSpan span;
  int end_line = 1;
};

struct Comment {
  std::string text;
  SourceSpan span;
  bool full_line = false;
};

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  std::vector<Datum> read_all() {
    std::vector<Datum> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) break;
      out.push_back(read_datum());
    }
    return out;
  }

  const std::vector<Comment>& comments() const { return comments_; }

 private:
  SourceSpan here() const { return SourceSpan{pos_, pos_, line_, column_}; }

  void advance() {
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    ++pos_;
    if (c == '\n') {
      ++line_;
      column_ = 1;
      line_has_code_ = false;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ';') {
        Comment comment;
        comment.span = here();
        comment.full_line = !line_has_code_;
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        comment.span.end = pos_;
        std::string text(src_.substr(start, pos_ - start));
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
          text.pop_back();
        }
        comment.text = std::move(text);
        comments_.push_back(std::move(comment));
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else {
        return;
      }
    }
  }

  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' || c == '"' ||
           c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f';
  }

  Datum read_datum() {
    char c = src_[pos_];
    SourceSpan start = here();
    line_has_code_ = true;
    if (c == '(' || c == '[' || c == '{') {
      char close = c == '(' ? ')' : c == '[' ? ']' : '}';
      Datum list;
      list.kind = Datum::Kind::List;
      list.open = c;
      advance();
      for (;;) {
        skip_space();
        if (pos_ >= src_.size()) {
          throw ParseError(std::string("unbalanced parentheses: missing a closing '") + close + "'",
                           start);
        }
        char d = src_[pos_];
        if (d == ')' || d == ']' || d == '}') {
          if (d != close) {
            throw ParseError(std::string("mismatched parentheses: expected '") + close +
                                 "' but found '" + d + "'",
                             here());
          }
          line_has_code_ = true;
          advance();
          break;
        }
        list.items.push_back(read_datum());
      }
      list.span = start;
      list.span.end = pos_;
      list.end_line = line_;
      return list;
    }
    if (c == ')' || c == ']' || c == '}') {
      throw ParseError(std::string("unbalanced parentheses: unexpected '") + c + "'", start);
    }
    if (c == '"') {
      advance();
      std::string value;
      for (;;) {
        if (pos_ >= src_.size()) throw ParseError("unterminated string literal", start);
        char d = src_[pos_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          advance();
          if (pos_ >= src_.size()) throw ParseError("unterminated string literal", start);
          char e = src_[pos_];
          switch (e) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case '\\': value += '\\'; break;
            case '"': value += '"'; break;
            default: throw ParseError(std::string("bad escape sequence \\") + e, here());
          }
          advance();
          continue;
        }
        value += d;
        advance();
      }
      Datum s;
      s.kind = Datum::Kind::String;
      s.text = std::move(value);
      s.span = start;
      s.span.end = pos_;
      s.end_line = line_;
      return s;
    }
    if (c == '\'' || c == '`' || c == ',') {
      throw ParseError("quoting is not supported", start);
    }
    std::size_t begin = pos_;
    while (pos_ < src_.size() && !is_delimiter(src_[pos_])) advance();
    Datum atom;
    atom.kind = Datum::Kind::Atom;
    atom.text = std::string(src_.substr(begin, pos_ - begin));
    atom.span = start;
    atom.span.end = pos_;
    atom.end_line = line_;
    return atom;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool line_has_code_ = false;
  std::vector<Comment> comments_;
};

const std::set<std::string, std::less<>> kReserved = {
    "define", "cond", "else", "and", "or", "check-expect", "check-within", "check-random",
    "lambda", "local", "quote", "let"};

class Builder {
 public:
  Expr expr(const Datum& d) { return build(d); }

  Definition top_level(const Datum& d) {
    if (d.kind != Datum::Kind::List || d.items.empty() ||
        d.items.front().kind != Datum::Kind::Atom) {
      throw ParseError("expected a definition or a test at the top level", d.span);
    }
    const std::string& head = d.items.front().text;
    Definition def;
    if (head == "define") {
      def = definition(d);
    } else if (head == "check-expect" || head == "check-random") {
      expect_items(d, 3, head + " expects 2 expressions");
      def = Definition::test(head == "check-expect" ? TestKind::Expect : TestKind::Random,
                             build(d.items[1]), build(d.items[2]));
    } else if (head == "check-within") {
      expect_items(d, 4, "check-within expects 3 expressions: actual, expected and tolerance");
      def = Definition::test(TestKind::Within, build(d.items[1]), build(d.items[2]),
                             build(d.items[3]));
    } else {
      throw ParseError("expected a definition or a test at the top level, found an expression",
                       d.span);
    }
    def.span = d.span;
    return def;
  }

 private:
  static void expect_items(const Datum& d, std::size_t n, const std::string& message) {
    if (d.items.size() != n) throw ParseError(message, d.span);
  }

  Definition definition(const Datum& d) {
    expect_items(d, 3, "define expects a name (or header) and exactly one body expression");
    const Datum& target = d.items[1];
    if (target.kind == Datum::Kind::Atom) {
      check_name(target, "define");
      return Definition::constant(target.text, build(d.items[2]));
    }
    if (target.kind != Datum::Kind::List || target.items.empty()) {
      throw ParseError("define: expected a variable name or a function header", target.span);
    }
    for (const auto& item : target.items) check_name(item, "define");
    if (target.items.size() < 2) {
      throw ParseError("define: a function needs at least one parameter", target.span);
    }
    std::vector<std::string> params;
    for (std::size_t i = 1; i < target.items.size(); ++i) {
      const std::string& p = target.items[i].text;
      if (std::find(params.begin(), params.end(), p) != params.end()) {
        throw ParseError("duplicate parameter name " + p, target.items[i].span);
      }
      params.push_back(p);
    }
    return Definition::function(target.items[0].text, std::move(params), build(d.items[2]));
  }

  static void check_name(const Datum& d, const std::string& context) {
    if (d.kind != Datum::Kind::Atom || looks_numeric(d.text) || d.text.front() == '#') {
      throw ParseError(context + ": expected a name", d.span);
    }
    if (kReserved.count(d.text)) {
      throw ParseError(context + ": " + d.text + " is a keyword and cannot be used as a name",
                       d.span);
    }
  }

  Expr atom(const Datum& d) {
    const std::string& t = d.text;
    if (t == "#true" || t == "#t" || t == "#T") return Expr::make_boolean(true);
    if (t == "#false" || t == "#f" || t == "#F") return Expr::make_boolean(false);
    if (t.front() == '#') throw ParseError("bad literal " + t, d.span);
    if (looks_numeric(t)) {
      std::optional<Rational> n;
      try {
        n = parse_number(t);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), d.span);
      }
      if (!n) throw ParseError("bad number literal " + t, d.span);
      return Expr::make_number(std::move(*n));
    }
    if (kReserved.count(t)) {
      throw ParseError(t + ": keyword used where an expression was expected", d.span);
    }
    return Expr::make_var(t);
  }

  Expr build(const Datum& d) {
    Expr e = build_inner(d);
    e.span = d.span;
    return e;
  }

  Expr build_inner(const Datum& d) {
    switch (d.kind) {
      case Datum::Kind::String: {
        return Expr::make_string(d.text);
      }
      case Datum::Kind::Atom: return atom(d);
      case Datum::Kind::List: break;
    }
    if (d.items.empty()) throw ParseError("empty application ()", d.span);
    const Datum& head = d.items.front();
    if (head.kind != Datum::Kind::Atom || looks_numeric(head.text) || head.text.front() == '#') {
      throw ParseError("function call: expected a function name after the open parenthesis",
                       head.span);
    }
    const std::string& op = head.text;
    Expr e;
    if (op == "cond") {
      e = cond(d);
    } else if (op == "and" || op == "or") {
      if (d.items.size() < 3) {
        throw ParseError(op + " expects at least 2 arguments", d.span);
      }
      std::vector<Expr> args;
      for (std::size_t i = 1; i < d.items.size(); ++i) args.push_back(build(d.items[i]));
      e = op == "and" ? Expr::make_and(std::move(args)) : Expr::make_or(std::move(args));
    } else if (op == "define") {
      throw ParseError("define: found a definition that is not at the top level", d.span);
    } else if (op == "check-expect" || op == "check-within" || op == "check-random") {
      throw ParseError(op + ": found a test that is not at the top level", d.span);
    } else if (kReserved.count(op)) {
      throw ParseError(op + " is not supported", head.span);
    } else {
      if (d.items.size() < 2) {
        throw ParseError(op + ": expected at least one argument", d.span);
      }
      std::vector<Expr> args;
      for (std::size_t i = 1; i < d.items.size(); ++i) args.push_back(build(d.items[i]));
      e = Expr::make_app(op, std::move(args));
    }
    return e;
  }

  Expr cond(const Datum& d) {
    std::vector<std::pair<Expr, Expr>> clauses;
    std::optional<Expr> otherwise;
    for (std::size_t i = 1; i < d.items.size(); ++i) {
      const Datum& clause = d.items[i];
      if (clause.kind != Datum::Kind::List || clause.items.size() != 2) {
        throw ParseError("cond: each clause must be a question and an answer", clause.span);
      }
      if (otherwise) throw ParseError("cond: else must be the last clause", clause.span);
      const Datum& q = clause.items[0];
      if (q.kind == Datum::Kind::Atom && q.text == "else") {
        otherwise = build(clause.items[1]);
      } else {
        Expr question = build(q);
        Expr answer = build(clause.items[1]);
        clauses.emplace_back(std::move(question), std::move(answer));
      }
    }
    if (clauses.empty()) throw ParseError("cond requires at least one clause", d.span);
    return Expr::make_cond(std::move(clauses), std::move(otherwise));
  }
};

}  // namespace

bool is_reserved_word(std::string_view name) { return kReserved.count(name) > 0; }

namespace {

void renumber(Expr& e, NodeId& next) {
  e.id = next++;
  for (auto& child : e.args) renumber(child, next);
}

}  // namespace

Program parse_program(std::string_view source) {
  Reader reader(source);
  std::vector<Datum> forms = reader.read_all();

  Program program;
  program.source = std::string(source);
  Builder builder;
  std::set<std::string> names;
  for (const auto& form : forms) {
    Definition def = builder.top_level(form);
    if (def.kind != DefKind::Test) {
      if (!names.insert(def.name).second) {
        throw ParseError(def.name + " is already defined", form.span);
      }
    }
    program.definitions.push_back(std::move(def));
  }
  NodeId next = 1;
  for (auto& def : program.definitions) {
    if (def.kind != DefKind::Test) {
      renumber(def.body, next);
      continue;
    }
    renumber(def.actual, next);
    renumber(def.expected, next);
    if (def.tolerance) renumber(*def.tolerance, next);
  }

  // Group full-line comments into runs of consecutive lines.
  std::vector<CommentBlock> runs;
  for (const auto& c : reader.comments()) {
    bool inside_form = false;
    for (const auto& form : forms) {
      if (c.span.begin > form.span.begin && c.span.begin < form.span.end) {
        inside_form = true;
        break;
      }
    }
    if (inside_form) continue;
    if (!c.full_line) {
      // Trailing comment of the form ending on this line.
      for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].end_line == c.span.line && forms[i].span.end <= c.span.begin) {
          program.definitions[i].trailing_comment = c.text;
        }
      }
      continue;
    }
    if (!runs.empty()) {
      CommentBlock& last = runs.back();
      int last_line = last.span.line + static_cast<int>(last.lines.size()) - 1;
      if (c.span.line == last_line + 1) {
        last.lines.push_back(c.text);
        last.span.end = c.span.end;
        continue;
      }
    }
    CommentBlock block;
    block.lines.push_back(c.text);
    block.span = c.span;
    runs.push_back(std::move(block));
  }

  for (auto& run : runs) {
    int last_line = run.span.line + static_cast<int>(run.lines.size()) - 1;
    std::size_t next_form = forms.size();
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].span.begin > run.span.begin) {
        next_form = i;
        break;
      }
    }
    if (next_form < forms.size() && forms[next_form].span.line == last_line + 1 &&
        program.definitions[next_form].comments.empty()) {
      program.definitions[next_form].comments = std::move(run);
    } else {
      program.free_comments.push_back(FreeComment{std::move(run), next_form});
    }
  }
  return program;
}

Expr parse_expr(std::string_view source) {
  Reader reader(source);
  std::vector<Datum> forms = reader.read_all();
  if (forms.size() != 1) {
    throw ParseError("expected exactly one expression", SourceSpan{});
  }
  Builder builder;
  Expr e = builder.expr(forms.front());
  NodeId next = 1;
  renumber(e, next);
  return e;
}

}  // namespace recipe::sexpr
