#pragma once

// Reference anti-unifier for two first-order terms, written without
// recursion over the generalization itself. Every position p of the first
// term is classified by looking at its prefixes:
//
//   p is part of the result iff every strict prefix q is a "branch": both
//   terms have an application there with the same operator and arity, the
//   operator is not atomic, and the two subterms differ.
//
// A result position is copied when both subterms are equal, becomes an
// operator node when it is itself a branch, and otherwise becomes a
// variable keyed by the pair of subterms. Variables are numbered in the
// order they are met in a pre-order listing of positions.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sexpr/printer.hpp"
#include "sexpr/syntax.hpp"

namespace recipe::testing {

struct OracleLgg {
  sexpr::Expr pattern;
  std::vector<std::pair<sexpr::Expr, sexpr::Expr>> holes;  // index = hole id
};

namespace lgg_detail {

using Path = std::vector<std::size_t>;

inline const sexpr::Expr* at(const sexpr::Expr& root, const Path& p) {
  const sexpr::Expr* e = &root;
  for (std::size_t i : p) {
    if (e->kind != sexpr::ExprKind::App || i >= e->args.size()) return nullptr;
    e = &e->args[i];
  }
  return e;
}

inline void all_paths(const sexpr::Expr& e, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    cur.push_back(i);
    all_paths(e.args[i], cur, out);
    cur.pop_back();
  }
}

struct Token {
  enum Kind { Copy, Op, Var } kind;
  const sexpr::Expr* node;  // Copy: the subtree; Op: the application
  int var = -1;
};

inline sexpr::Expr rebuild(const std::vector<Token>& tokens, std::size_t& i) {
  const Token& t = tokens[i++];
  if (t.kind == Token::Copy) return *t.node;
  if (t.kind == Token::Var) return sexpr::Expr::make_hole(t.var);
  std::vector<sexpr::Expr> args;
  for (std::size_t k = 0; k < t.node->args.size(); ++k) args.push_back(rebuild(tokens, i));
  return sexpr::Expr::make_app(t.node->text, std::move(args));
}

}  // namespace lgg_detail

inline OracleLgg oracle_lgg(const sexpr::Expr& s, const sexpr::Expr& t,
                            const std::set<std::string>& atomic) {
  using namespace lgg_detail;
  auto branch = [&](const Path& q) {
    const sexpr::Expr* a = at(s, q);
    const sexpr::Expr* b = at(t, q);
    return a && b && a->kind == sexpr::ExprKind::App && b->kind == sexpr::ExprKind::App &&
           a->text == b->text && a->args.size() == b->args.size() && !atomic.count(a->text) &&
           !(*a == *b);
  };

  std::vector<Path> paths;
  Path cur;
  all_paths(s, cur, paths);  // pre-order

  OracleLgg out;
  std::map<std::pair<std::string, std::string>, int> vars;
  std::vector<Token> tokens;
  for (const Path& p : paths) {
    bool included = true;
    for (std::size_t len = 0; len < p.size() && included; ++len) {
      included = branch(Path(p.begin(), p.begin() + static_cast<long>(len)));
    }
    if (!included) continue;
    const sexpr::Expr* a = at(s, p);
    const sexpr::Expr* b = at(t, p);
    if (*a == *b) {
      tokens.push_back({Token::Copy, a});
    } else if (branch(p)) {
      tokens.push_back({Token::Op, a});
    } else {
      auto key = std::make_pair(sexpr::to_string(*a), sexpr::to_string(*b));
      auto [it, fresh] = vars.emplace(key, static_cast<int>(out.holes.size()));
      if (fresh) out.holes.emplace_back(*a, *b);
      tokens.push_back({Token::Var, nullptr, it->second});
    }
  }
  std::size_t i = 0;
  out.pattern = rebuild(tokens, i);
  return out;
}

}  // namespace recipe::testing
