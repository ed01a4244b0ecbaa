#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unaryp/bigint.hpp"
#include "unaryp/system.hpp"

namespace unaryp {

/// Removes one homomorphism whose column is generated by the remaining
/// columns (reducible, duplicate or identity) and folds its single
/// application into the axiom. Preserves the at-least-once language.
/// Returns nullopt when every column is a distinct irreducible. When
/// several homomorphisms qualify, the one giving the smallest new axiom is
/// removed (ties broken by lowest index).
std::optional<UnaryPSystem> reduce_once(const UnaryPSystem& sys);

/// size(reduced) <= size(sys)^2 - 1, the per-step growth bound.
bool check_quadratic_bound(const UnaryPSystem& sys, const UnaryPSystem& reduced);

/// Axiom a^m with n copies of a -> a^m; size (n+1)*m. The family on which
/// the reduction's size growth is tight. Requires m >= 2, n >= 1.
UnaryPSystem worst_case_family(std::uint64_t m, std::size_t n);

/// Sizes before and after x applications of reduce_once on
/// worst_case_family(m, n), measured by actually running the reduction.
/// Requires m >= 2 and 1 <= x <= n-1.
std::pair<BigInt, BigInt> iterated_reduction_sizes(std::uint64_t m, std::size_t n,
                                                   std::size_t x);

/// n symbols, one of each in the axiom; homomorphism i raises symbol i to
/// the i-th prime and fixes the rest. Needs n >= 1.
GeneralPSystem prime_power_family(std::size_t n);

/// Size trajectory of repeated reductions plus per-step bound checks.
struct TradeoffReport {
  struct BoundCheck {
    std::string id;
    bool satisfied = false;
  };
  std::size_t original_homs = 0;
  BigInt original_size;
  std::vector<std::pair<std::size_t, BigInt>> reduced_sizes;  // (hom count, size)
  std::vector<BoundCheck> bound_checks;
};

/// Runs reduce_once up to `times` times, stopping early when nothing is
/// reducible, and records sizes and quadratic-bound checks.
TradeoffReport reduce_report(const UnaryPSystem& sys, std::size_t times);

/// Aligned human-readable table.
std::string format_table(const TradeoffReport& report);
/// One line per data point: "n=<hom count> size=<size>".
std::string format_machine(const TradeoffReport& report);

}  // namespace unaryp
