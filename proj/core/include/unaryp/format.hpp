#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unaryp/system.hpp"

namespace unaryp {

struct ParseDiagnostic {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based
  std::string message;
};

/// A parsed description together with its source text and the line each
/// directive came from, so later validation can point back into the input.
struct SystemDocument {
  std::string source;
  GeneralPSystem system;
  std::size_t alphabet_line = 0;
  std::size_t axiom_line = 0;
  std::vector<std::size_t> hom_lines;
};

struct ParseResult {
  std::optional<SystemDocument> document;
  std::vector<ParseDiagnostic> diagnostics;
  bool ok() const { return document.has_value(); }
};

/// Parses the line format:
///
///   alphabet: a b
///   axiom: a^2 b^1
///   hom: a->a^6
///   hom: b->b^4
///
/// `#` starts a comment, blank lines are ignored, LF and CRLF both accepted.
/// Symbols omitted from a hom line default to identity. When the text
/// starts with '{' it is read as the JSON mirror instead.
ParseResult parse_system(std::string_view text);

/// Normalized line format (LF line ends); parses back to an identical
/// system. A system without homomorphisms is written with one explicit
/// identity homomorphism so the output stays parseable.
std::string serialize(const GeneralPSystem& sys);

/// JSON mirror: {"alphabet": [...], "axiom": {sym: count},
/// "homomorphisms": [{sym: exp}, ...]}. Counts that do not fit 64 bits are
/// emitted as decimal strings; the parser accepts both forms.
std::string serialize_json(const GeneralPSystem& sys);

}  // namespace unaryp
