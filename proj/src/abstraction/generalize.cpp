#include "abstraction/generalize.hpp"

#include <algorithm>
#include <map>

namespace recipe::abstraction {

using sexpr::Expr;
using sexpr::ExprKind;

namespace {

class AntiUnifier {
 public:
  AntiUnifier(const std::set<std::string>& atomic, std::size_t count)
      : atomic_(atomic), count_(count) {}

  Expr run(const std::vector<const Expr*>& nodes, Path& path) {
    const Expr& first = *nodes.front();
    bool all_equal = std::all_of(nodes.begin(), nodes.end(),
                                 [&](const Expr* n) { return *n == first; });
    if (all_equal) return strip_locations(first);

    bool any_special = std::any_of(nodes.begin(), nodes.end(),
                                   [](const Expr* n) { return n->is_special_form(); });
    if (any_special) {
      for (const Expr* n : nodes) {
        if (n->kind != first.kind || n->args.size() != first.args.size() ||
            n->has_else != first.has_else) {
          throw ShapeError(describe_mismatch(first, *n), {first.span, n->span});
        }
      }
      return descend(nodes, path);
    }

    bool same_app = first.kind == ExprKind::App && !atomic_.count(first.text) &&
                    std::all_of(nodes.begin(), nodes.end(), [&](const Expr* n) {
                      return n->kind == ExprKind::App && n->text == first.text &&
                             n->args.size() == first.args.size();
                    });
    if (same_app) return descend(nodes, path);
    return hole(nodes, path);
  }

  std::vector<Hole> take_holes() { return std::move(holes_); }

 private:
  static std::string shape(const Expr& e) {
    if (e.kind == ExprKind::Cond) {
      return "cond with " + std::to_string(e.clause_count()) + " clause(s)" +
             (e.has_else ? " and else" : "");
    }
    if (e.kind == ExprKind::And || e.kind == ExprKind::Or) {
      return std::string(sexpr::kind_name(e.kind)) + " with " + std::to_string(e.args.size()) +
             " operands";
    }
    return sexpr::kind_name(e.kind);
  }

  static std::string describe_mismatch(const Expr& a, const Expr& b) {
    return "samples are not written in the same manner: " + shape(a) + " at " + describe(a.span) +
           " but " + shape(b) + " at " + describe(b.span);
  }

  Expr descend(const std::vector<const Expr*>& nodes, Path& path) {
    Expr out = *nodes.front();
    out.span = {};
    out.id = 0;
    for (std::size_t i = 0; i < out.args.size(); ++i) {
      std::vector<const Expr*> column;
      column.reserve(nodes.size());
      for (const Expr* n : nodes) column.push_back(&n->args[i]);
      path.push_back(i);
      out.args[i] = run(column, path);
      path.pop_back();
    }
    return out;
  }

  Expr hole(const std::vector<const Expr*>& nodes, const Path& path) {
    std::vector<Expr> values;
    values.reserve(count_);
    for (const Expr* n : nodes) values.push_back(*n);
    for (auto& h : holes_) {
      if (h.values == values) {
        h.positions.push_back(path);
        return Expr::make_hole(h.id);
      }
    }
    Hole h;
    h.id = static_cast<int>(holes_.size());
    h.values = std::move(values);
    h.positions.push_back(path);
    holes_.push_back(std::move(h));
    return Expr::make_hole(holes_.back().id);
  }

  const std::set<std::string>& atomic_;
  std::size_t count_;
  std::vector<Hole> holes_;
};

Expr substitute(const Expr& pattern, const std::vector<Hole>& holes, std::size_t sample) {
  if (pattern.kind == ExprKind::Hole) return holes[pattern.hole].values[sample];
  Expr out = pattern;
  for (auto& child : out.args) child = substitute(child, holes, sample);
  return out;
}

bool match(const Expr& pattern, const Expr& body, const std::vector<std::string>& params,
           std::vector<std::optional<std::size_t>>& mapping, std::map<std::size_t, int>& inverse) {
  if (pattern.kind == ExprKind::Hole) {
    if (body.kind != ExprKind::Var) return false;
    auto it = std::find(params.begin(), params.end(), body.text);
    if (it == params.end()) return false;
    std::size_t param = static_cast<std::size_t>(it - params.begin());
    auto& slot = mapping[pattern.hole];
    if (slot) return *slot == param;
    if (inverse.count(param)) return false;
    slot = param;
    inverse[param] = pattern.hole;
    return true;
  }
  if (pattern.kind == ExprKind::Var) {
    // A template variable refers to a global; a parameter of the same name
    // would shadow it.
    if (std::find(params.begin(), params.end(), pattern.text) != params.end()) return false;
  }
  if (pattern.kind != body.kind || pattern.args.size() != body.args.size()) return false;
  switch (pattern.kind) {
    case ExprKind::App:
      if (pattern.text != body.text) return false;
      break;
    case ExprKind::Cond:
      if (pattern.has_else != body.has_else) return false;
      break;
    case ExprKind::And:
    case ExprKind::Or: break;
    default: return pattern == body;
  }
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(pattern.args[i], body.args[i], params, mapping, inverse)) return false;
  }
  return true;
}

bool alpha(const Expr& a, const Expr& b, const std::vector<std::string>& pa,
           const std::vector<std::string>& pb) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.kind == ExprKind::Var) {
    auto ia = std::find(pa.begin(), pa.end(), a.text);
    auto ib = std::find(pb.begin(), pb.end(), b.text);
    bool la = ia != pa.end();
    bool lb = ib != pb.end();
    if (la != lb) return false;
    if (la) return (ia - pa.begin()) == (ib - pb.begin());
    return a.text == b.text;
  }
  switch (a.kind) {
    case ExprKind::App:
      if (a.text != b.text) return false;
      break;
    case ExprKind::Cond:
      if (a.has_else != b.has_else) return false;
      break;
    case ExprKind::And:
    case ExprKind::Or: break;
    default: return a == b;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!alpha(a.args[i], b.args[i], pa, pb)) return false;
  }
  return true;
}

}  // namespace

Expr strip_locations(Expr e) {
  e.span = {};
  e.id = 0;
  for (auto& child : e.args) child = strip_locations(std::move(child));
  return e;
}

Expr Generalization::instantiate(std::size_t i) const { return substitute(pattern, holes, i); }

Generalization generalize(const std::vector<Expr>& samples, const std::set<std::string>& atomic_forms) {
  if (samples.size() < 2) {
    throw InvalidArgument("generalization needs at least two sample expressions");
  }
  std::vector<const Expr*> nodes;
  for (const auto& s : samples) nodes.push_back(&s);
  AntiUnifier au(atomic_forms, samples.size());
  Path path;
  Generalization g;
  g.pattern = au.run(nodes, path);
  g.holes = au.take_holes();
  g.sample_count = samples.size();
  for (auto& h : g.holes) {
    for (auto& v : h.values) v = strip_locations(std::move(v));
  }
  return g;
}

Expr fill_holes(const Expr& pattern, const std::vector<std::string>& names) {
  if (pattern.kind == ExprKind::Hole) return Expr::make_var(names.at(pattern.hole));
  Expr out = pattern;
  for (auto& child : out.args) child = fill_holes(child, names);
  return out;
}

std::optional<std::vector<std::size_t>> match_template(const Expr& pattern, const Expr& body,
                                                       const std::vector<std::string>& params) {
  int hole_count = 0;
  sexpr::for_each_node(pattern, [&](const Expr& n) {
    if (n.kind == ExprKind::Hole) hole_count = std::max(hole_count, n.hole + 1);
  });
  std::vector<std::optional<std::size_t>> mapping(hole_count);
  std::map<std::size_t, int> inverse;
  if (!match(pattern, body, params, mapping, inverse)) return std::nullopt;
  std::vector<std::size_t> out;
  for (const auto& m : mapping) {
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

bool alpha_equivalent(const sexpr::Definition& f, const sexpr::Definition& g) {
  if (f.kind != sexpr::DefKind::Function || g.kind != sexpr::DefKind::Function) return false;
  if (f.params.size() != g.params.size()) return false;
  return alpha(f.body, g.body, f.params, g.params);
}

}  // namespace recipe::abstraction
