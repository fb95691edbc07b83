#pragma once

// Random sample families for generalization properties, plus the
// idempotence and permutation-stability checks shared by the property tests
// and the acceptance binary.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "abstraction/generalize.hpp"
#include "sexpr/printer.hpp"

namespace recipe::testing {

inline sexpr::Expr random_term(std::mt19937_64& rng, int depth, bool special_forms = true) {
  using sexpr::Expr;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (depth <= 1 || pick(0, 3) == 0) {
    switch (pick(0, 3)) {
      case 0: return Expr::make_number(pick(0, 3));
      case 1: return Expr::make_var(pick(0, 1) ? "a" : "b");
      case 2: return Expr::make_string(pick(0, 1) ? "up" : "down");
      default: return Expr::make_boolean(pick(0, 1) == 1);
    }
  }
  switch (pick(0, special_forms ? 5 : 3)) {
    case 0: return Expr::make_app("f", {random_term(rng, depth - 1)});
    case 1: return Expr::make_app("g", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 2: return Expr::make_app("make-posn", {random_term(rng, depth - 1), random_term(rng, depth - 1)});
    case 3:
      return Expr::make_app("+", {random_term(rng, depth - 1), random_term(rng, depth - 1),
                                  random_term(rng, depth - 1)});
    case 4: return Expr::make_and({random_term(rng, depth - 1), random_term(rng, depth - 1)});
    default:
      return Expr::make_cond({{random_term(rng, depth - 1), random_term(rng, depth - 1)}},
                             random_term(rng, depth - 1));
  }
}

// 2..4 samples sharing a random depth-4 skeleton, each with some leaves
// replaced by operator-only terms, so shape errors stay rare.
inline std::vector<sexpr::Expr> random_family(std::mt19937_64& rng) {
  sexpr::Expr base = random_term(rng, 4);
  int n = std::uniform_int_distribution<int>(2, 4)(rng);
  std::vector<sexpr::Expr> out;
  for (int i = 0; i < n; ++i) {
    sexpr::Expr copy = base;
    std::vector<sexpr::Expr*> leaves;
    std::vector<sexpr::Expr*> stack{&copy};
    while (!stack.empty()) {
      sexpr::Expr* e = stack.back();
      stack.pop_back();
      if (e->args.empty()) leaves.push_back(e);
      for (auto& c : e->args) stack.push_back(&c);
    }
    for (sexpr::Expr* leaf : leaves) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) *leaf = random_term(rng, 2, false);
    }
    out.push_back(copy);
  }
  return out;
}

struct PropertyResult {
  int checked = 0;  // families that generalized
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

// Instantiating the generalization reproduces each sample, and generalizing
// those instances again yields the same template.
inline PropertyResult check_idempotence(std::uint64_t seed, int cases) {
  using abstraction::generalize;
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int i = 0; i < cases; ++i) {
    auto family = random_family(rng);
    abstraction::Generalization g;
    try {
      g = generalize(family);
    } catch (const ShapeError&) {
      continue;
    }
    ++r.checked;
    std::vector<sexpr::Expr> again;
    for (std::size_t k = 0; k < family.size(); ++k) {
      again.push_back(g.instantiate(k));
      if (!(again.back() == family[k])) r.fail("instance differs from " + sexpr::to_string(family[k]));
    }
    auto g2 = generalize(again);
    if (!(g2.pattern == g.pattern)) r.fail("regeneralized " + sexpr::to_string(g.pattern));
    auto same = generalize({family[0], family[0]});
    if (!(same.pattern == family[0]) || !same.holes.empty()) {
      r.fail("self-generalization of " + sexpr::to_string(family[0]));
    }
  }
  return r;
}

// Shuffling the samples leaves the template unchanged and permutes the hole
// values the same way.
inline PropertyResult check_permutation_stability(std::uint64_t seed, int cases) {
  using abstraction::generalize;
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int i = 0; i < cases; ++i) {
    auto family = random_family(rng);
    std::vector<std::size_t> order(family.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<sexpr::Expr> permuted;
    for (std::size_t k : order) permuted.push_back(family[k]);

    bool failed_a = false, failed_b = false;
    abstraction::Generalization a, b;
    try { a = generalize(family); } catch (const ShapeError&) { failed_a = true; }
    try { b = generalize(permuted); } catch (const ShapeError&) { failed_b = true; }
    if (failed_a != failed_b) {
      r.fail("shape error depends on order for " + sexpr::to_string(family[0]));
      continue;
    }
    if (failed_a) continue;
    ++r.checked;
    if (!(a.pattern == b.pattern) || a.holes.size() != b.holes.size()) {
      r.fail(sexpr::to_string(a.pattern) + " vs " + sexpr::to_string(b.pattern));
      continue;
    }
    for (std::size_t h = 0; h < a.holes.size(); ++h) {
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (!(b.holes[h].values[k] == a.holes[h].values[order[k]])) {
          r.fail("hole values permuted differently in " + sexpr::to_string(a.pattern));
        }
      }
    }
  }
  return r;
}

}  // namespace recipe::testing
