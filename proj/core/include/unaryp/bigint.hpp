#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace unaryp {

/// Arbitrary-precision non-negative integer. Axiom lengths, homomorphism
/// exponents and language members all live here: rebuilding a system from
/// its factorized form can produce values far beyond 64 bits.
using BigInt = mpz_class;

/// base^exp, exact.
BigInt big_pow(const BigInt& base, std::uint64_t exp);

/// Strict decimal parse: one or more digits, nothing else.
std::optional<BigInt> parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

}  // namespace unaryp
