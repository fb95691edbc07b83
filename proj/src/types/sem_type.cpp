#include "types/sem_type.hpp"

#include <algorithm>
#include <cctype>

#include "sexpr/printer.hpp"

namespace recipe::types {

SemType join(const SemType& a, const SemType& b, std::size_t enum_limit) {
  if (a.kind == TypeKind::Never) return b;
  if (b.kind == TypeKind::Never) return a;
  if (a.kind == TypeKind::Any || b.kind == TypeKind::Any) return SemType::any();
  if (a == b) return a;

  auto numeric = [](TypeKind k) { return k == TypeKind::NonNegReal || k == TypeKind::Real; };
  if (numeric(a.kind) && numeric(b.kind)) return SemType::real();

  auto stringy = [](TypeKind k) { return k == TypeKind::StringEnum || k == TypeKind::StringAny; };
  if (stringy(a.kind) && stringy(b.kind)) {
    if (a.kind == TypeKind::StringAny || b.kind == TypeKind::StringAny) return SemType::string_any();
    std::set<std::string> merged = a.literals;
    merged.insert(b.literals.begin(), b.literals.end());
    if (merged.size() > enum_limit) return SemType::string_any();
    return SemType::string_enum(std::move(merged));
  }
  return SemType::any();
}

bool subtype(const SemType& a, const SemType& b, std::size_t enum_limit) {
  return join(a, b, enum_limit) == b;
}

SemType type_of(const eval::Value& v) {
  if (v.is_number()) return v.as_number() >= 0 ? SemType::nonneg_real() : SemType::real();
  if (v.is_string()) return SemType::string_enum({v.as_string()});
  if (v.is_boolean()) return SemType::boolean();
  if (v.is_posn()) return SemType::posn();
  if (v.is_image()) return SemType::image();
  return SemType::alias_of("world");
}

SemType infer_type(const std::vector<eval::Value>& values, std::size_t enum_limit) {
  SemType result = SemType::never();
  for (const auto& v : values) {
    result = join(result, type_of(v), enum_limit);
  }
  return result;
}

std::string render_type(const SemType& t) {
  switch (t.kind) {
    case TypeKind::Never: return "Never";
    case TypeKind::Any: return "Any";
    case TypeKind::Boolean: return "Boolean";
    case TypeKind::StringAny: return "String";
    case TypeKind::NonNegReal: return "NonNegReal";
    case TypeKind::Real: return "Real";
    case TypeKind::Posn: return "Posn";
    case TypeKind::Image: return "Image";
    case TypeKind::Alias: return t.alias;
    case TypeKind::StringEnum: {
      std::string out;
      for (const auto& lit : t.literals) {
        if (!out.empty()) out += "|";
        out += sexpr::quote_string(lit);
      }
      return out;
    }
  }
  return "Any";
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Splits "\"a\"|\"b\"" into its literals; nullopt if malformed.
std::optional<std::set<std::string>> enum_literals(const std::string& token) {
  std::set<std::string> out;
  std::size_t i = 0;
  while (i < token.size()) {
    if (token[i] != '"') return std::nullopt;
    ++i;
    std::string lit;
    while (i < token.size() && token[i] != '"') {
      if (token[i] == '\\' && i + 1 < token.size()) ++i;
      lit += token[i++];
    }
    if (i >= token.size()) return std::nullopt;
    ++i;
    out.insert(lit);
    if (i == token.size()) break;
    if (token[i] != '|') return std::nullopt;
    ++i;
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

SemType parse_type_token(const std::string& token, const AliasMap& aliases) {
  if (!token.empty() && token.front() == '"') {
    if (auto lits = enum_literals(token)) return SemType::string_enum(std::move(*lits));
  }
  if (token == "ℝ≥0" || token == "R>=0" || token == "ℝ+" || token == "ℝ₊") return SemType::nonneg_real();
  if (token == "ℝ") return SemType::real();
  std::string l = lower(token);
  if (l == "nonnegreal" || l == "nonnegative-number" || l == "non-negative-real") {
    return SemType::nonneg_real();
  }
  if (l == "real" || l == "number") return SemType::real();
  if (l == "boolean" || l == "bool") return SemType::boolean();
  if (l == "string") return SemType::string_any();
  if (l == "posn") return SemType::posn();
  if (l == "image") return SemType::image();
  if (l == "any") return SemType::any();
  if (l == "never") return SemType::never();
  if (auto it = aliases.find(token); it != aliases.end()) return it->second;
  return SemType::alias_of(token);
}

}  // namespace recipe::types
