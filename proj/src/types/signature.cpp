#include "types/signature.hpp"

namespace recipe::types {
namespace {

bool is_arrow(const std::string& token) {
  return token == "->" || token == "-->" || token == "--->" || token == "→" || token == "⟶";
}

// Whitespace-separated tokens; double quotes group (for enum literals).
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      current += c;
      if (c == '\\' && i + 1 < text.size()) {
        current += text[++i];
      } else if (c == '"') {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
      current += c;
    } else if (c == ' ' || c == '\t') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

std::string render_signature(const Signature& sig) {
  std::string out;
  for (const auto& p : sig.params) out += render_type(p) + " ";
  return out + "-> " + render_type(sig.result);
}

std::optional<Signature> parse_signature_line(const std::string& line, const AliasMap& aliases) {
  std::size_t start = 0;
  while (start < line.size() && (line[start] == ';' || line[start] == ' ' || line[start] == '\t')) {
    ++start;
  }
  std::vector<std::string> tokens = tokenize(line.substr(start));
  if (tokens.empty() || tokens.front().back() == ':') return std::nullopt;
  std::size_t arrows = 0, arrow_at = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (is_arrow(tokens[i])) {
      ++arrows;
      arrow_at = i;
    }
  }
  if (arrows != 1 || arrow_at + 2 != tokens.size()) return std::nullopt;
  Signature sig;
  for (std::size_t i = 0; i < arrow_at; ++i) sig.params.push_back(parse_type_token(tokens[i], aliases));
  sig.result = parse_type_token(tokens.back(), aliases);
  return sig;
}

std::optional<Signature> parse_signature_comment(const sexpr::CommentBlock& block,
                                                 const AliasMap& aliases) {
  for (const auto& line : block.lines) {
    if (auto sig = parse_signature_line(line, aliases)) return sig;
  }
  return std::nullopt;
}

std::vector<std::vector<eval::Value>> hole_values(const abstraction::Generalization& g,
                                                  eval::Evaluator& evaluator) {
  std::vector<std::vector<eval::Value>> out;
  for (const auto& hole : g.holes) {
    std::vector<eval::Value> values;
    for (const auto& e : hole.values) {
      eval::RngState rng{0};
      values.push_back(evaluator.evaluate(e, rng));
    }
    out.push_back(std::move(values));
  }
  return out;
}

Signature infer_signature(const abstraction::Generalization& g,
                          const std::vector<eval::Value>& return_values, eval::Evaluator& evaluator,
                          std::size_t enum_limit) {
  Signature sig;
  for (const auto& values : hole_values(g, evaluator)) {
    sig.params.push_back(infer_type(values, enum_limit));
  }
  sig.result = return_values.empty() ? SemType::never() : infer_type(return_values, enum_limit);
  return sig;
}

}  // namespace recipe::types
