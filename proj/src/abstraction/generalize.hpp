#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sexpr/syntax.hpp"
#include "util/error.hpp"

namespace recipe::abstraction {

// Child-index path from the template root.
using Path = std::vector<std::size_t>;

struct Hole {
  int id = 0;
  std::vector<sexpr::Expr> values;  // one per sample, in sample order
  std::vector<Path> positions;      // pre-order
};

// Least-general generalization of a sample family: the template contains
// ExprKind::Hole nodes numbered in order of first occurrence (left-to-right
// pre-order). Holes with elementwise-equal value lists share an id.
struct Generalization {
  sexpr::Expr pattern;
  std::vector<Hole> holes;
  std::size_t sample_count = 0;

  // The template with sample `i`'s subexpressions plugged into every hole.
  sexpr::Expr instantiate(std::size_t i) const;
};

inline const std::set<std::string> kDefaultAtomicForms = {"make-posn"};

// Anti-unifies `samples` (at least two). Equal subtrees are kept verbatim,
// applications with the same operator and arity are generalized argument by
// argument, and any other disagreement becomes a hole over the whole
// subtree. Applications of an operator in `atomic_forms` are never entered.
//
// Throws ShapeError when samples disagree on a special form (cond/and/or or
// its shape) outside a hole, and InvalidArgument for fewer than two samples.
Generalization generalize(const std::vector<sexpr::Expr>& samples,
                          const std::set<std::string>& atomic_forms = kDefaultAtomicForms);

// Replaces every hole k with (VarRef names[k]).
sexpr::Expr fill_holes(const sexpr::Expr& pattern, const std::vector<std::string>& names);

// Matches a function body against a template. On success returns, for each
// hole, the index of the parameter standing in for it; the mapping is
// injective and consistent across repeated occurrences.
std::optional<std::vector<std::size_t>> match_template(const sexpr::Expr& pattern,
                                                       const sexpr::Expr& body,
                                                       const std::vector<std::string>& params);

// Equal up to a consistent, position-wise renaming of parameters.
bool alpha_equivalent(const sexpr::Definition& f, const sexpr::Definition& g);

// Clears spans and node ids throughout.
sexpr::Expr strip_locations(sexpr::Expr e);

}  // namespace recipe::abstraction
