#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/parameter.hpp"

namespace theta {

struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;
  int line = 1;
  int column = 1;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;
};

struct ParseResult {
  std::optional<AParameter> value;
  std::vector<Diagnostic> diagnostics;  // non-empty iff !value
};

/// Grammar:
///   param := "case" CASE "side" SIDE "dim" INT ":" [sum]
///   sum   := term ("+" term)*
///   term  := [INT "*"] rho "*" "S(" INT ")" "*" "S(" INT ")" ["@" HALF]
///   rho   := NAME "[" INT "," DUALITY ("," flag)* "]"
///   flag  := "triv" | twist token (xV, xW, xV^-1, ...)
///   HALF  := INT | INT "/2"
/// Whitespace insensitive. Structural invariants (dimension sum, target_dim
/// parity) are reported as diagnostics too; errors never escape as
/// exceptions.
ParseResult parse_parameter(const std::string& text);

/// Canonical text form; parse(print(p)) == p for canonical p (det oracles
/// are JSON-only data and are not printed).
std::string print_parameter(const AParameter& p);

}  // namespace theta
