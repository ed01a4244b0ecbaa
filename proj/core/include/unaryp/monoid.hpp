#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unaryp/bigint.hpp"
#include "unaryp/factor.hpp"
#include "unaryp/system.hpp"

namespace unaryp {

/// Additive view of a unary system: column j is the factorization of the
/// j-th coefficient, `offset` the factorization of the axiom length, and
/// `max_prime_index` the largest prime index occurring in either. Columns
/// must be non-zero, so identity homomorphisms have to be stripped first.
struct MonoidRepr {
  std::uint32_t max_prime_index = 1;
  std::vector<FactorVector> columns;
  FactorVector offset;
};

/// The unique minimal description of a unary language: the offset (axiom
/// factorization) plus the sorted distinct irreducible generators of the
/// coefficient monoid. Structural equality decides language equality.
struct CanonicalForm {
  FactorVector offset;
  std::vector<FactorVector> generators;
  bool operator==(const CanonicalForm&) const = default;
};

/// Throws std::invalid_argument if the system is invalid or still contains
/// identity homomorphisms (their columns would be zero).
MonoidRepr build_repr(const UnaryPSystem& sys);

/// Searches for multiplicities v with sum_j v[j]*columns[j] == target.
/// Zero columns are tolerated and always get multiplicity 0. Returns
/// nullopt when target is not a non-negative combination.
std::optional<std::vector<std::uint64_t>> find_combination(
    std::span<const FactorVector> columns, const FactorVector& target);

/// Multiplicities witnessing that x lies in the monoid generated by the
/// columns, or nullopt. The zero vector is witnessed by all zeros.
std::optional<std::vector<std::uint64_t>> monoid_member(const MonoidRepr& repr,
                                                        const FactorVector& x);

/// True iff x cannot be written as the sum of two non-zero elements of the
/// generated monoid; equivalently, no combination of the columns with total
/// multiplicity >= 2 yields x. Throws std::invalid_argument on x == 0.
bool is_irreducible(const MonoidRepr& repr, const FactorVector& x);

/// Strips identities, keeps exactly the distinct irreducible columns, sorts
/// them, and attaches the offset.
CanonicalForm canonicalize(const UnaryPSystem& sys);

/// The unary system whose axiom and coefficients are exactly the integers
/// of the canonical form; canonicalize(rebuild(f)) == f.
UnaryPSystem rebuild(const CanonicalForm& form);

/// rebuild(canonicalize(sys)): the fewest homomorphisms generating the same
/// language.
UnaryPSystem minimize(const UnaryPSystem& sys);

/// Decides equality of the generated languages exactly, by comparing
/// canonical forms.
bool equivalent_star(const UnaryPSystem& a, const UnaryPSystem& b);
bool equivalent_plus(const UnaryPSystem& a, const UnaryPSystem& b);
/// Mixed-mode comparison, e.g. the at-least-once language of `a` against
/// the any-number language of `b`.
bool equivalent(const UnaryPSystem& a, Semantics sem_a,
                const UnaryPSystem& b, Semantics sem_b);

/// Either the singleton {a^member} (the only context-free case) or an
/// infinite language that is not context-free.
struct LanguageClass {
  bool singleton = false;
  BigInt member;  // meaningful only when singleton
  bool operator==(const LanguageClass&) const = default;
};
LanguageClass classify_context_free(const UnaryPSystem& sys);

/// Text form: "offset: <n>" then one "gen: <n>" line per generator, with
/// the generator integers in increasing order.
std::string serialize(const CanonicalForm& form);

}  // namespace unaryp
