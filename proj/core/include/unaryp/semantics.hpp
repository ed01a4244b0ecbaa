#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "unaryp/bigint.hpp"
#include "unaryp/system.hpp"

namespace unaryp {

using ParikhVector = std::vector<BigInt>;

/// Simulator state: the index of the innermost intact membrane (0 means
/// everything has dissolved into the skin and the computation halted) and
/// the current object counts.
struct Configuration {
  std::size_t depth = 0;
  ParikhVector contents;
  bool operator==(const Configuration&) const = default;
};

// Language enumeration up to a total-symbol-count bound. Unary results are
// ascending member lengths; general results are Parikh vectors in
// lexicographic order. bound must be >= 1 and the system valid.
std::vector<BigInt> enumerate_star(const UnaryPSystem& sys, const BigInt& bound);
std::vector<BigInt> enumerate_plus(const UnaryPSystem& sys, const BigInt& bound);
std::vector<ParikhVector> enumerate_star(const GeneralPSystem& sys, const BigInt& bound);
std::vector<ParikhVector> enumerate_plus(const GeneralPSystem& sys, const BigInt& bound);

/// Exact, unbounded membership of a^m. On success the returned
/// per-homomorphism application counts satisfy
///   axiom_len * prod coeffs[i]^counts[i] == m.
/// Throws std::invalid_argument for m < 1.
std::optional<std::vector<std::uint64_t>> member_star(const UnaryPSystem& sys,
                                                      const BigInt& m);
/// Same under at-least-once semantics; every returned count is >= 1.
std::optional<std::vector<std::uint64_t>> member_plus(const UnaryPSystem& sys,
                                                      const BigInt& m);

// Membrane-level oracle: breadth-first search over configurations where the
// innermost region either applies its homomorphism (maximally parallel, one
// rewrite per object) or dissolves. Collects the contents of every halted
// configuration with total <= bound. Agrees with enumerate_star.
std::vector<BigInt> simulate_reachable(const UnaryPSystem& sys, const BigInt& bound);
std::vector<ParikhVector> simulate_reachable(const GeneralPSystem& sys, const BigInt& bound);

}  // namespace unaryp
