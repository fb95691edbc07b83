#pragma once

#include <cstddef>
#include <string>

namespace recipe {

// Byte range into the source text plus the 1-based position of its first
// character. Columns count code points, not bytes.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

inline std::string describe(const SourceSpan& span) {
  return std::to_string(span.line) + ":" + std::to_string(span.column);
}

}  // namespace recipe
