#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extremes {

// Byte offsets into the parsed input, half-open.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message, std::vector<std::string> expected)
      : Error(message), span_(span), expected_(std::move(expected)) {}

  SourceSpan span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

// A construct outside the fragment a procedure decides: nested products,
// arity > 2, mixed-rank unions, a decider called on the wrong statement class.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message, std::optional<SourceSpan> span = {})
      : Error(message), span_(span) {}

  std::optional<SourceSpan> span() const { return span_; }

 private:
  std::optional<SourceSpan> span_;
};

// Raised before enumeration starts when the case count would exceed the cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Missing extension or valuation, or a rank mismatch during model evaluation.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace extremes
