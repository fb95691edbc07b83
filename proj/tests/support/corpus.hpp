#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sexpr/parser.hpp"

namespace recipe::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(RECIPE_CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline sexpr::Program load_corpus(const std::string& name) {
  return sexpr::parse_program(read_corpus(name));
}

// Source text with every line containing `needle` removed.
inline std::string without_lines(const std::string& source, const std::string& needle) {
  std::istringstream in(source);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.find(needle) == std::string::npos) out += line + "\n";
  }
  return out;
}

}  // namespace recipe::testing
