#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eval/value.hpp"

namespace recipe::types {

enum class TypeKind {
  Never,
  Boolean,
  StringEnum,
  StringAny,
  NonNegReal,
  Real,
  Posn,
  Image,
  Alias,
  Any,
};

// Semantic type of a recipe parameter or result.
//
// Order: Never below everything, Any above everything, NonNegReal ⊑ Real,
// StringEnum(S) ⊑ StringEnum(T) iff S ⊆ T, StringEnum ⊑ StringAny. An alias
// is only related to itself (and Never/Any).
struct SemType {
  TypeKind kind = TypeKind::Never;
  std::set<std::string> literals;  // StringEnum
  std::string alias;               // Alias

  static SemType never() { return {TypeKind::Never, {}, {}}; }
  static SemType any() { return {TypeKind::Any, {}, {}}; }
  static SemType boolean() { return {TypeKind::Boolean, {}, {}}; }
  static SemType string_any() { return {TypeKind::StringAny, {}, {}}; }
  static SemType string_enum(std::set<std::string> values) {
    return {TypeKind::StringEnum, std::move(values), {}};
  }
  static SemType nonneg_real() { return {TypeKind::NonNegReal, {}, {}}; }
  static SemType real() { return {TypeKind::Real, {}, {}}; }
  static SemType posn() { return {TypeKind::Posn, {}, {}}; }
  static SemType image() { return {TypeKind::Image, {}, {}}; }
  static SemType alias_of(std::string name) { return {TypeKind::Alias, {}, std::move(name)}; }

  friend bool operator==(const SemType&, const SemType&) = default;
};

constexpr std::size_t kDefaultEnumLimit = 8;

// Least upper bound. A StringEnum with more than `enum_limit` literals widens
// to StringAny.
SemType join(const SemType& a, const SemType& b, std::size_t enum_limit = kDefaultEnumLimit);

// a ⊑ b
bool subtype(const SemType& a, const SemType& b, std::size_t enum_limit = kDefaultEnumLimit);

SemType type_of(const eval::Value& v);

// Join of the per-value types. `values` must be non-empty.
SemType infer_type(const std::vector<eval::Value>& values, std::size_t enum_limit = kDefaultEnumLimit);

using AliasMap = std::map<std::string, SemType>;

// Single whitespace-free token: NonNegReal, Real, Boolean, String, Posn,
// Image, Any, Never, "a"|"b" for enums, or an alias name.
std::string render_type(const SemType& t);

// Inverse of render_type; also accepts ℝ≥0, ℝ, Number and lower-case
// spellings. Unknown identifiers resolve through `aliases` or become Alias.
SemType parse_type_token(const std::string& token, const AliasMap& aliases = {});

}  // namespace recipe::types
