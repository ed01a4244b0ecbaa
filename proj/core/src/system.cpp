#include "unaryp/system.hpp"

#include <stdexcept>
#include <string>

namespace unaryp {

std::vector<Diagnostic> validate(const UnaryPSystem& sys) {
  std::vector<Diagnostic> out;
  if (sys.axiom_len < 1) out.push_back({"axiom", "empty axiom"});
  for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
    if (sys.coeffs[i] < 1)
      out.push_back({"hom[" + std::to_string(i + 1) + "]", "erasing rule forbidden"});
  }
  return out;
}

std::vector<Diagnostic> validate(const GeneralPSystem& sys) {
  std::vector<Diagnostic> out;
  for (std::size_t s = 0; s < sys.alphabet.size(); ++s) {
    for (std::size_t t = s + 1; t < sys.alphabet.size(); ++t) {
      if (sys.alphabet[s] == sys.alphabet[t])
        out.push_back({"alphabet", "duplicate symbol '" + sys.alphabet[s] + "'"});
    }
  }
  if (sys.axiom.size() != sys.alphabet.size()) {
    out.push_back({"axiom", "axiom arity does not match the alphabet"});
    return out;
  }
  BigInt total = 0;
  for (std::size_t s = 0; s < sys.axiom.size(); ++s) {
    if (sys.axiom[s] < 0)
      out.push_back({"axiom", "negative count for symbol '" + sys.alphabet[s] + "'"});
    else
      total += sys.axiom[s];
  }
  if (total < 1) out.push_back({"axiom", "empty axiom"});
  for (std::size_t i = 0; i < sys.homs.size(); ++i) {
    const std::string field = "hom[" + std::to_string(i + 1) + "]";
    if (sys.homs[i].size() != sys.alphabet.size()) {
      out.push_back({field, "rule arity does not match the alphabet"});
      continue;
    }
    for (std::size_t s = 0; s < sys.homs[i].size(); ++s) {
      if (sys.homs[i][s] < 1) out.push_back({field, "erasing rule forbidden"});
    }
  }
  return out;
}

namespace {

void throw_first(const std::vector<Diagnostic>& diags) {
  if (!diags.empty())
    throw std::invalid_argument(diags.front().field + ": " + diags.front().message);
}

}  // namespace

void require_valid(const UnaryPSystem& sys) { throw_first(validate(sys)); }
void require_valid(const GeneralPSystem& sys) { throw_first(validate(sys)); }

BigInt system_size(const UnaryPSystem& sys) {
  BigInt out = sys.axiom_len;
  for (const BigInt& c : sys.coeffs) out += c;
  return out;
}

BigInt system_size(const GeneralPSystem& sys) {
  BigInt out = 0;
  for (const BigInt& c : sys.axiom) out += c;
  for (const auto& hom : sys.homs)
    for (const BigInt& e : hom) out += e;
  return out;
}

namespace {

void check_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n)
    throw std::invalid_argument("permutation must cover all " + std::to_string(n) +
                                " homomorphisms");
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("permutation must be a bijection on 1.." +
                                  std::to_string(n));
    seen[v - 1] = true;
  }
}

}  // namespace

UnaryPSystem permute(const UnaryPSystem& sys, std::span<const std::size_t> order) {
  check_permutation(order, sys.coeffs.size());
  UnaryPSystem out;
  out.axiom_len = sys.axiom_len;
  out.coeffs.reserve(order.size());
  for (std::size_t v : order) out.coeffs.push_back(sys.coeffs[v - 1]);
  return out;
}

GeneralPSystem permute(const GeneralPSystem& sys, std::span<const std::size_t> order) {
  check_permutation(order, sys.homs.size());
  GeneralPSystem out;
  out.alphabet = sys.alphabet;
  out.axiom = sys.axiom;
  out.homs.reserve(order.size());
  for (std::size_t v : order) out.homs.push_back(sys.homs[v - 1]);
  return out;
}

UnaryPSystem plus_to_star(const UnaryPSystem& sys) {
  UnaryPSystem out = sys;
  for (const BigInt& c : sys.coeffs) out.axiom_len *= c;
  return out;
}

GeneralPSystem plus_to_star(const GeneralPSystem& sys) {
  GeneralPSystem out = sys;
  for (const auto& hom : sys.homs)
    for (std::size_t s = 0; s < out.axiom.size(); ++s) out.axiom[s] *= hom[s];
  return out;
}

std::pair<UnaryPSystem, std::size_t> strip_identities(const UnaryPSystem& sys) {
  UnaryPSystem out;
  out.axiom_len = sys.axiom_len;
  for (const BigInt& c : sys.coeffs)
    if (c != 1) out.coeffs.push_back(c);
  return {out, sys.coeffs.size() - out.coeffs.size()};
}

std::pair<GeneralPSystem, std::size_t> strip_identities(const GeneralPSystem& sys) {
  GeneralPSystem out;
  out.alphabet = sys.alphabet;
  out.axiom = sys.axiom;
  for (const auto& hom : sys.homs) {
    bool identity = true;
    for (const BigInt& e : hom) {
      if (e != 1) {
        identity = false;
        break;
      }
    }
    if (!identity) out.homs.push_back(hom);
  }
  return {out, sys.homs.size() - out.homs.size()};
}

std::optional<UnaryPSystem> as_unary(const GeneralPSystem& sys) {
  if (sys.alphabet.size() != 1) return std::nullopt;
  UnaryPSystem out;
  out.axiom_len = sys.axiom[0];
  out.coeffs.reserve(sys.homs.size());
  for (const auto& hom : sys.homs) out.coeffs.push_back(hom[0]);
  return out;
}

GeneralPSystem to_general(const UnaryPSystem& sys, std::string symbol) {
  GeneralPSystem out;
  out.alphabet = {std::move(symbol)};
  out.axiom = {sys.axiom_len};
  out.homs.reserve(sys.coeffs.size());
  for (const BigInt& c : sys.coeffs) out.homs.push_back({c});
  return out;
}

}  // namespace unaryp
