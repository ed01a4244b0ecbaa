#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "unaryp/bigint.hpp"

namespace unaryp {

/// Finite-support mapping from 1-based prime indices to exponents.
/// Index i stands for the i-th prime, so index 1 is 2, index 2 is 3, and so
/// on. Entries are kept sorted by index and a zero exponent is never stored,
/// which makes structural equality the same as mathematical equality.
class FactorVector {
 public:
  struct Entry {
    std::uint32_t prime_index = 0;  // 1-based
    std::uint64_t exponent = 0;
    auto operator<=>(const Entry&) const = default;
  };

  /// The empty mapping, i.e. the factorization of 1.
  FactorVector() = default;

  /// Builds a vector from (index, exponent) pairs. Zero exponents are
  /// dropped and repeated indices are summed; indices must be >= 1.
  static FactorVector from_entries(std::vector<Entry> entries);
  static FactorVector single(std::uint32_t prime_index, std::uint64_t exponent);

  /// Exponent at a prime index; 0 when the index is not in the support.
  std::uint64_t exponent(std::uint32_t prime_index) const;

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Largest prime index in the support; 0 for the empty vector.
  std::uint32_t max_index() const;

  /// Sum of all exponents.
  std::uint64_t total() const;

  /// Pointwise sum. Mirrors integer multiplication: the factorization of
  /// m*n is the sum of the factorizations of m and n.
  friend FactorVector operator+(const FactorVector& f, const FactorVector& g);

  /// Pointwise difference; nullopt if any coordinate would go negative.
  std::optional<FactorVector> minus(const FactorVector& g) const;

  /// Every exponent multiplied by k; k == 0 gives the empty vector.
  FactorVector scaled(std::uint64_t k) const;

  bool operator==(const FactorVector&) const = default;
  /// Total order used for canonical sorting: lexicographic on the sorted
  /// (index, exponent) entry sequence.
  auto operator<=>(const FactorVector&) const = default;

 private:
  std::vector<Entry> entries_;
};

/// Pointwise comparison: true iff f(p) <= g(p) for every prime p.
bool partial_leq(const FactorVector& f, const FactorVector& g);

/// The i-th prime, 1-based: nth_prime(1) == 2. The underlying prime table
/// grows on demand and is shared; concurrent callers are synchronized.
/// Throws std::invalid_argument for i == 0 and std::runtime_error when i is
/// beyond the supported table size.
std::uint64_t nth_prime(std::uint32_t i);

/// 1-based index of the prime p (the inverse of nth_prime).
/// Throws std::invalid_argument if p is not prime.
std::uint32_t prime_index(std::uint64_t p);

/// Prime factorization of m >= 1; factorize(1) is the empty vector.
/// Throws std::invalid_argument for m < 1.
FactorVector factorize(const BigInt& m);

/// Index of the greatest prime factor of m, with gpf(1) == 1 by convention.
/// Throws std::invalid_argument for m < 1.
std::uint32_t gpf(const BigInt& m);

/// The unique integer whose factorization is f (1 for the empty vector).
BigInt to_integer(const FactorVector& f);

}  // namespace unaryp
