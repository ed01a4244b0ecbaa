#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unaryp/bigint.hpp"

namespace unaryp {

/// Validation finding. `field` names the offending part of the system
/// ("axiom", "hom[2]", ...).
struct Diagnostic {
  std::string field;
  std::string message;
};

/// One-symbol self-reproducing system: axiom a^{axiom_len} and homomorphisms
/// h_i(a) = a^{coeffs[i-1]}, listed outermost-first.
///
/// Valid systems have axiom_len >= 1 and every coefficient >= 1. An empty
/// coefficient list is allowed in memory (a fully minimized singleton
/// language has no homomorphisms) but the text format requires at least one.
struct UnaryPSystem {
  BigInt axiom_len;
  std::vector<BigInt> coeffs;
  bool operator==(const UnaryPSystem&) const = default;
};

/// Self-reproducing system over an arbitrary alphabet. `axiom` is a Parikh
/// vector indexed like `alphabet`; homs[i][s] is the exponent homomorphism
/// i applies to symbol s (1 leaves it unchanged).
struct GeneralPSystem {
  std::vector<std::string> alphabet;
  std::vector<BigInt> axiom;
  std::vector<std::vector<BigInt>> homs;
  bool operator==(const GeneralPSystem&) const = default;
};

/// Which language a system is read under: every homomorphism applied any
/// number of times (star) or at least once (plus).
enum class Semantics { star, plus };

/// Checks the type invariants; an empty result means the system is valid.
std::vector<Diagnostic> validate(const UnaryPSystem& sys);
std::vector<Diagnostic> validate(const GeneralPSystem& sys);

/// Throws std::invalid_argument carrying the first diagnostic. Operations
/// with a validity precondition call this on entry.
void require_valid(const UnaryPSystem& sys);
void require_valid(const GeneralPSystem& sys);

/// Axiom length plus the summed lengths of all homomorphism images.
BigInt system_size(const UnaryPSystem& sys);
/// Extension of the unary measure to general alphabets: total axiom count
/// plus the sum of every per-symbol exponent. Restricts to the unary
/// measure on one-symbol systems; used for reporting only.
BigInt system_size(const GeneralPSystem& sys);

/// Reorders the homomorphisms: the j-th homomorphism of the result is
/// number order[j-1] of the input (1-based). The generated languages are
/// unchanged. Throws std::invalid_argument unless `order` is a bijection
/// on 1..n.
UnaryPSystem permute(const UnaryPSystem& sys, std::span<const std::size_t> order);
GeneralPSystem permute(const GeneralPSystem& sys, std::span<const std::size_t> order);

/// Replaces the axiom by its image under every homomorphism applied once.
/// The at-least-once language of the input equals the any-number-of-times
/// language of the result.
UnaryPSystem plus_to_star(const UnaryPSystem& sys);
GeneralPSystem plus_to_star(const GeneralPSystem& sys);

/// Removes identity homomorphisms (unary: coefficient 1; general: all
/// exponents 1). Returns the stripped system and how many were removed.
std::pair<UnaryPSystem, std::size_t> strip_identities(const UnaryPSystem& sys);
std::pair<GeneralPSystem, std::size_t> strip_identities(const GeneralPSystem& sys);

/// Succeeds iff the alphabet has exactly one symbol.
std::optional<UnaryPSystem> as_unary(const GeneralPSystem& sys);

/// One-symbol general wrapper around a unary system.
GeneralPSystem to_general(const UnaryPSystem& sys, std::string symbol = "a");

}  // namespace unaryp
