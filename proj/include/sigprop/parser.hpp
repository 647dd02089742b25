#pragma once

#include <string>
#include <vector>

#include "sigprop/ast.hpp"

namespace sigprop {

/// Parse error with the source location of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, SourceSpan span)
      : Error(code, message + " (line " + std::to_string(span.line) + ", column " +
                        std::to_string(span.column) + ")"),
        span_(span) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Parses a property file (UTF-8, `#` comments) into one AST per declaration,
/// in file order.
std::vector<PropertyAst> parse(const std::string& text);

/// Canonical textual form; parse(pretty_print(x)) pretty-prints back to the
/// same string.
std::string pretty_print(const PropertyAst& prop);
std::string pretty_print(const std::vector<PropertyAst>& props);

}  // namespace sigprop
