#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "util/source_span.hpp"

namespace recipe {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  Error(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(span) {}

  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  std::optional<SourceSpan> span_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

// Samples disagree on a special form at a position that is not a hole.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& message, std::vector<SourceSpan> spans)
      : Error(message, spans.empty() ? SourceSpan{} : spans.front()),
        spans_(std::move(spans)) {}

  const std::vector<SourceSpan>& spans() const { return spans_; }

 private:
  std::vector<SourceSpan> spans_;
};

class NoDifferenceError : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace recipe
