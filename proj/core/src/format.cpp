#include "unaryp/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <nlohmann/json.hpp>
#include <utility>

#include "unaryp/bigint.hpp"

namespace unaryp {

namespace {

bool is_symbol_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

// "sym" or "sym^count"; returns (symbol, count) or reports into diags.
struct SymbolCount {
  std::string symbol;
  BigInt count;
};

std::optional<SymbolCount> parse_symbol_count(const Token& tok, std::size_t line_no,
                                              const BigInt& default_count,
                                              std::vector<ParseDiagnostic>& diags) {
  std::size_t i = 0;
  const std::string& t = tok.text;
  if (i >= t.size() || !is_symbol_start(t[i])) {
    diags.push_back({line_no, tok.column, "malformed entry '" + t + "'"});
    return std::nullopt;
  }
  while (i < t.size() && is_symbol_char(t[i])) ++i;
  SymbolCount out;
  out.symbol = t.substr(0, i);
  if (i == t.size()) {
    out.count = default_count;
    return out;
  }
  if (t[i] != '^') {
    diags.push_back({line_no, tok.column + i, "expected '^' in '" + t + "'"});
    return std::nullopt;
  }
  auto count = parse_bigint(std::string_view(t).substr(i + 1));
  if (!count) {
    diags.push_back({line_no, tok.column + i + 1, "malformed count in '" + t + "'"});
    return std::nullopt;
  }
  out.count = std::move(*count);
  return out;
}

// One rule "sym->sym^exp" (or "sym->sym" for exponent 1).
struct Rule {
  std::string symbol;
  BigInt exponent;
  std::size_t column = 0;
};

std::optional<Rule> parse_rule(const Token& tok, std::size_t line_no,
                               std::vector<ParseDiagnostic>& diags) {
  const std::string& t = tok.text;
  std::size_t arrow = t.find("->");
  if (arrow == std::string::npos) {
    diags.push_back({line_no, tok.column, "expected 'symbol->symbol^exp' in '" + t + "'"});
    return std::nullopt;
  }
  std::string lhs = t.substr(0, arrow);
  Token rhs_tok{t.substr(arrow + 2), tok.column + arrow + 2};
  if (lhs.empty() || !is_symbol_start(lhs[0]) ||
      !std::all_of(lhs.begin(), lhs.end(), is_symbol_char)) {
    diags.push_back({line_no, tok.column, "malformed rule '" + t + "'"});
    return std::nullopt;
  }
  auto rhs = parse_symbol_count(rhs_tok, line_no, BigInt(1), diags);
  if (!rhs) return std::nullopt;
  if (rhs->symbol != lhs) {
    diags.push_back(
        {line_no, rhs_tok.column, "rule must map a symbol to a power of itself"});
    return std::nullopt;
  }
  return Rule{lhs, rhs->count, tok.column};
}

ParseResult parse_json_document(std::string_view text);

}  // namespace

ParseResult parse_system(std::string_view text) {
  // JSON mirror: the line format never starts with '{'.
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_document(text);
    break;
  }

  ParseResult result;
  auto& diags = result.diagnostics;

  SystemDocument doc;
  doc.source = std::string(text);
  GeneralPSystem& sys = doc.system;
  std::map<std::string, std::size_t> symbol_index;
  bool saw_alphabet = false, saw_axiom = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    std::string directive = tokens[0].text;
    if (!directive.empty() && directive.back() == ':') directive.pop_back();
    bool glued = tokens[0].text.back() == ':';
    // Accept both "axiom: ..." and "axiom : ..." spellings.
    std::size_t first_arg = 1;
    if (!glued) {
      if (tokens.size() < 2 || tokens[1].text != ":") {
        diags.push_back({line_no, tokens[0].column, "expected ':' after directive"});
        continue;
      }
      first_arg = 2;
    }

    if (directive == "alphabet") {
      if (saw_alphabet) {
        diags.push_back({line_no, tokens[0].column, "duplicate alphabet directive"});
        continue;
      }
      saw_alphabet = true;
      doc.alphabet_line = line_no;
      for (std::size_t k = first_arg; k < tokens.size(); ++k) {
        const Token& tok = tokens[k];
        if (!is_symbol_start(tok.text[0]) ||
            !std::all_of(tok.text.begin(), tok.text.end(), is_symbol_char)) {
          diags.push_back({line_no, tok.column, "malformed symbol '" + tok.text + "'"});
          continue;
        }
        if (symbol_index.count(tok.text)) {
          diags.push_back(
              {line_no, tok.column, "duplicate symbol '" + tok.text + "' in alphabet"});
          continue;
        }
        symbol_index[tok.text] = sys.alphabet.size();
        sys.alphabet.push_back(tok.text);
      }
      if (sys.alphabet.empty())
        diags.push_back({line_no, tokens[0].column, "empty alphabet"});
      sys.axiom.assign(sys.alphabet.size(), BigInt(0));
    } else if (directive == "axiom") {
      if (!saw_alphabet) {
        diags.push_back(
            {line_no, tokens[0].column, "alphabet must be declared before the axiom"});
        continue;
      }
      if (saw_axiom) {
        diags.push_back({line_no, tokens[0].column, "duplicate axiom directive"});
        continue;
      }
      saw_axiom = true;
      doc.axiom_line = line_no;
      for (std::size_t k = first_arg; k < tokens.size(); ++k) {
        auto entry = parse_symbol_count(tokens[k], line_no, BigInt(1), diags);
        if (!entry) continue;
        auto it = symbol_index.find(entry->symbol);
        if (it == symbol_index.end()) {
          diags.push_back({line_no, tokens[k].column,
                           "symbol '" + entry->symbol + "' not in alphabet"});
          continue;
        }
        sys.axiom[it->second] += entry->count;
      }
    } else if (directive == "hom") {
      if (!saw_alphabet) {
        diags.push_back({line_no, tokens[0].column,
                         "alphabet must be declared before homomorphisms"});
        continue;
      }
      doc.hom_lines.push_back(line_no);
      std::vector<BigInt> hom(sys.alphabet.size(), BigInt(1));
      std::vector<bool> assigned(sys.alphabet.size(), false);
      for (std::size_t k = first_arg; k < tokens.size(); ++k) {
        auto rule = parse_rule(tokens[k], line_no, diags);
        if (!rule) continue;
        auto it = symbol_index.find(rule->symbol);
        if (it == symbol_index.end()) {
          diags.push_back({line_no, rule->column,
                           "symbol '" + rule->symbol + "' not in alphabet"});
          continue;
        }
        if (assigned[it->second]) {
          diags.push_back({line_no, rule->column,
                           "duplicate rule for symbol '" + rule->symbol + "'"});
          continue;
        }
        if (rule->exponent < 1) {
          diags.push_back({line_no, rule->column, "erasing rule forbidden"});
          continue;
        }
        assigned[it->second] = true;
        hom[it->second] = std::move(rule->exponent);
      }
      sys.homs.push_back(std::move(hom));
    } else {
      diags.push_back(
          {line_no, tokens[0].column, "unknown directive '" + directive + "'"});
    }
  }

  if (!saw_alphabet) diags.push_back({line_no, 1, "missing alphabet"});
  if (saw_alphabet && !saw_axiom) diags.push_back({line_no, 1, "missing axiom"});
  if (saw_axiom) {
    BigInt total = 0;
    for (const BigInt& c : sys.axiom) total += c;
    if (total < 1) diags.push_back({doc.axiom_line, 1, "empty axiom"});
  }
  if (saw_alphabet && sys.homs.empty())
    diags.push_back({line_no, 1, "at least one homomorphism is required"});

  if (!diags.empty()) return result;
  result.document = std::move(doc);
  return result;
}

namespace {

ParseResult parse_json_document(std::string_view text) {
  ParseResult result;
  auto& diags = result.diagnostics;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    diags.push_back({1, 1, std::string("invalid JSON: ") + e.what()});
    return result;
  }

  auto count_from = [&](const nlohmann::json& v,
                        const std::string& where) -> std::optional<BigInt> {
    if (v.is_number_unsigned()) return BigInt(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_string()) {
      if (auto parsed = parse_bigint(v.get<std::string>())) return parsed;
    }
    diags.push_back({1, 1, where + " must be a non-negative integer or decimal string"});
    return std::nullopt;
  };

  SystemDocument out;
  out.source = std::string(text);
  GeneralPSystem& sys = out.system;

  if (!doc.is_object() || !doc.contains("alphabet") || !doc["alphabet"].is_array()) {
    diags.push_back({1, 1, "expected an object with an \"alphabet\" array"});
    return result;
  }
  std::map<std::string, std::size_t> symbol_index;
  for (const auto& entry : doc["alphabet"]) {
    if (!entry.is_string()) {
      diags.push_back({1, 1, "alphabet entries must be strings"});
      return result;
    }
    std::string symbol = entry.get<std::string>();
    if (symbol_index.count(symbol)) {
      diags.push_back({1, 1, "duplicate symbol '" + symbol + "' in alphabet"});
      continue;
    }
    symbol_index[symbol] = sys.alphabet.size();
    sys.alphabet.push_back(std::move(symbol));
  }
  if (sys.alphabet.empty()) diags.push_back({1, 1, "empty alphabet"});
  sys.axiom.assign(sys.alphabet.size(), BigInt(0));

  if (!doc.contains("axiom") || !doc["axiom"].is_object()) {
    diags.push_back({1, 1, "expected an \"axiom\" object"});
    return result;
  }
  for (const auto& [symbol, value] : doc["axiom"].items()) {
    auto it = symbol_index.find(symbol);
    if (it == symbol_index.end()) {
      diags.push_back({1, 1, "symbol '" + symbol + "' not in alphabet"});
      continue;
    }
    if (auto count = count_from(value, "axiom count for '" + symbol + "'"))
      sys.axiom[it->second] += *count;
  }
  BigInt total = 0;
  for (const BigInt& c : sys.axiom) total += c;
  if (total < 1) diags.push_back({1, 1, "empty axiom"});

  if (!doc.contains("homomorphisms") || !doc["homomorphisms"].is_array()) {
    diags.push_back({1, 1, "expected a \"homomorphisms\" array"});
    return result;
  }
  for (const auto& hom_doc : doc["homomorphisms"]) {
    if (!hom_doc.is_object()) {
      diags.push_back({1, 1, "homomorphisms must be objects"});
      continue;
    }
    std::vector<BigInt> hom(sys.alphabet.size(), BigInt(1));
    for (const auto& [symbol, value] : hom_doc.items()) {
      auto it = symbol_index.find(symbol);
      if (it == symbol_index.end()) {
        diags.push_back({1, 1, "symbol '" + symbol + "' not in alphabet"});
        continue;
      }
      auto exp = count_from(value, "exponent for '" + symbol + "'");
      if (!exp) continue;
      if (*exp < 1) {
        diags.push_back({1, 1, "erasing rule forbidden"});
        continue;
      }
      hom[it->second] = std::move(*exp);
    }
    sys.homs.push_back(std::move(hom));
  }
  if (sys.homs.empty())
    diags.push_back({1, 1, "at least one homomorphism is required"});

  if (!diags.empty()) return result;
  result.document = std::move(out);
  return result;
}

}  // namespace

std::string serialize(const GeneralPSystem& sys) {
  std::string out = "alphabet:";
  for (const std::string& s : sys.alphabet) out += " " + s;
  out += "\naxiom:";
  for (std::size_t s = 0; s < sys.alphabet.size(); ++s) {
    if (sys.axiom[s] > 0)
      out += " " + sys.alphabet[s] + "^" + to_string(sys.axiom[s]);
  }
  out += "\n";
  if (sys.homs.empty()) {
    // Keep the output parseable: the format requires at least one
    // homomorphism, and an explicit identity changes no language.
    out += "hom: " + sys.alphabet[0] + "->" + sys.alphabet[0] + "^1\n";
    return out;
  }
  for (const auto& hom : sys.homs) {
    out += "hom:";
    bool any = false;
    for (std::size_t s = 0; s < sys.alphabet.size(); ++s) {
      if (hom[s] != 1) {
        out += " " + sys.alphabet[s] + "->" + sys.alphabet[s] + "^" + to_string(hom[s]);
        any = true;
      }
    }
    if (!any)
      out += " " + sys.alphabet[0] + "->" + sys.alphabet[0] + "^1";
    out += "\n";
  }
  return out;
}

namespace {

nlohmann::json count_to_json(const BigInt& value) {
  if (value.fits_ulong_p()) return value.get_ui();
  return to_string(value);
}

}  // namespace

std::string serialize_json(const GeneralPSystem& sys) {
  nlohmann::json doc;
  doc["alphabet"] = sys.alphabet;
  nlohmann::json axiom = nlohmann::json::object();
  for (std::size_t s = 0; s < sys.alphabet.size(); ++s) {
    if (sys.axiom[s] > 0) axiom[sys.alphabet[s]] = count_to_json(sys.axiom[s]);
  }
  doc["axiom"] = std::move(axiom);
  nlohmann::json homs = nlohmann::json::array();
  for (const auto& hom : sys.homs) {
    nlohmann::json entry = nlohmann::json::object();
    for (std::size_t s = 0; s < sys.alphabet.size(); ++s) {
      if (hom[s] != 1) entry[sys.alphabet[s]] = count_to_json(hom[s]);
    }
    homs.push_back(std::move(entry));
  }
  doc["homomorphisms"] = std::move(homs);
  return doc.dump(2) + "\n";
}

}  // namespace unaryp
