#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abstraction/generalize.hpp"
#include "eval/evaluator.hpp"
#include "sexpr/syntax.hpp"
#include "types/sem_type.hpp"

namespace recipe::types {

struct Signature {
  std::vector<SemType> params;
  SemType result;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// "T1 ... Tn -> T" (no leading ';').
std::string render_signature(const Signature& sig);

// Recognizes one signature line: optional leading ';'s, then type tokens, one
// arrow (-> --> ---> →) and exactly one result token. Lines whose first
// token ends in ':' (e.g. "Purpose:") are not signatures.
std::optional<Signature> parse_signature_line(const std::string& line, const AliasMap& aliases = {});

// First signature line of a comment block.
std::optional<Signature> parse_signature_comment(const sexpr::CommentBlock& block,
                                                 const AliasMap& aliases = {});

// Parameter types from each hole's evaluated subexpressions, result type from
// the evaluated samples. Throws EvalError if a hole value cannot be evaluated.
Signature infer_signature(const abstraction::Generalization& g,
                          const std::vector<eval::Value>& return_values, eval::Evaluator& evaluator,
                          std::size_t enum_limit = kDefaultEnumLimit);

// Evaluated hole values, one vector per hole.
std::vector<std::vector<eval::Value>> hole_values(const abstraction::Generalization& g,
                                                  eval::Evaluator& evaluator);

}  // namespace recipe::types
