#include "unaryp/factor.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace unaryp {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  return BigInt(std::string(text), 10);
}

std::string to_string(const BigInt& value) { return value.get_str(); }

namespace {

// Shared prime table, re-sieved with a doubled limit whenever a request
// runs past the end. Everything small stays cheap; truly absurd requests
// hit the hard cap below instead of exhausting memory.
constexpr std::uint64_t kSieveHardCap = 100'000'000;

class PrimeTable {
 public:
  std::uint64_t nth(std::uint32_t i) {
    std::scoped_lock lock(mu_);
    while (primes_.size() < i) {
      if (limit_ >= kSieveHardCap)
        throw std::runtime_error("prime table exhausted at index " +
                                 std::to_string(primes_.size()));
      resieve(std::min(kSieveHardCap, std::max<std::uint64_t>(limit_ * 2, 1024)));
    }
    return primes_[i - 1];
  }

  // 1-based index of p among the primes; nullopt if p is composite.
  std::optional<std::uint32_t> index_of(std::uint64_t p) {
    if (p < 2) return std::nullopt;
    if (p > kSieveHardCap)
      throw std::runtime_error("prime factor too large for the prime table: " +
                               std::to_string(p));
    std::scoped_lock lock(mu_);
    while (limit_ < p)
      resieve(std::min(kSieveHardCap, std::max<std::uint64_t>(limit_ * 2, 1024)));
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p) return std::nullopt;
    return static_cast<std::uint32_t>(it - primes_.begin()) + 1;
  }

 private:
  void resieve(std::uint64_t new_limit) {
    std::vector<bool> composite(new_limit + 1, false);
    primes_.clear();
    for (std::uint64_t p = 2; p <= new_limit; ++p) {
      if (composite[p]) continue;
      primes_.push_back(p);
      for (std::uint64_t q = p * p; q <= new_limit; q += p) composite[q] = true;
    }
    limit_ = new_limit;
  }

  std::mutex mu_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

}  // namespace

std::uint64_t nth_prime(std::uint32_t i) {
  if (i == 0) throw std::invalid_argument("prime indices are 1-based");
  return table().nth(i);
}

std::uint32_t prime_index(std::uint64_t p) {
  auto idx = table().index_of(p);
  if (!idx) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return *idx;
}

FactorVector FactorVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  FactorVector out;
  for (const Entry& e : entries) {
    if (e.prime_index == 0) throw std::invalid_argument("prime indices are 1-based");
    if (e.exponent == 0) continue;
    if (!out.entries_.empty() && out.entries_.back().prime_index == e.prime_index)
      out.entries_.back().exponent += e.exponent;
    else
      out.entries_.push_back(e);
  }
  return out;
}

FactorVector FactorVector::single(std::uint32_t prime_index, std::uint64_t exponent) {
  return from_entries({{prime_index, exponent}});
}

std::uint64_t FactorVector::exponent(std::uint32_t prime_index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), prime_index,
      [](const Entry& e, std::uint32_t idx) { return e.prime_index < idx; });
  return (it != entries_.end() && it->prime_index == prime_index) ? it->exponent : 0;
}

std::uint32_t FactorVector::max_index() const {
  return entries_.empty() ? 0 : entries_.back().prime_index;
}

std::uint64_t FactorVector::total() const {
  std::uint64_t sum = 0;
  for (const Entry& e : entries_) sum += e.exponent;
  return sum;
}

FactorVector operator+(const FactorVector& f, const FactorVector& g) {
  FactorVector out;
  auto a = f.entries_.begin(), b = g.entries_.begin();
  while (a != f.entries_.end() || b != g.entries_.end()) {
    if (b == g.entries_.end() || (a != f.entries_.end() && a->prime_index < b->prime_index)) {
      out.entries_.push_back(*a++);
    } else if (a == f.entries_.end() || b->prime_index < a->prime_index) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->prime_index, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<FactorVector> FactorVector::minus(const FactorVector& g) const {
  FactorVector out;
  auto a = entries_.begin();
  for (const Entry& e : g.entries_) {
    while (a != entries_.end() && a->prime_index < e.prime_index)
      out.entries_.push_back(*a++);
    if (a == entries_.end() || a->prime_index != e.prime_index ||
        a->exponent < e.exponent)
      return std::nullopt;
    if (a->exponent > e.exponent)
      out.entries_.push_back({e.prime_index, a->exponent - e.exponent});
    ++a;
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  return out;
}

FactorVector FactorVector::scaled(std::uint64_t k) const {
  FactorVector out;
  if (k == 0) return out;
  out.entries_ = entries_;
  for (Entry& e : out.entries_) e.exponent *= k;
  return out;
}

bool partial_leq(const FactorVector& f, const FactorVector& g) {
  for (const FactorVector::Entry& e : f.entries()) {
    if (e.exponent > g.exponent(e.prime_index)) return false;
  }
  return true;
}

namespace {

// Trial division fast path for word-sized inputs.
FactorVector factorize_u64(std::uint64_t m) {
  std::vector<FactorVector::Entry> entries;
  for (std::uint32_t i = 1; m > 1; ++i) {
    std::uint64_t p = nth_prime(i);
    if (p > m / p) {  // p*p > m without overflow: the rest is prime
      entries.push_back({prime_index(m), 1});
      break;
    }
    std::uint64_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) entries.push_back({i, e});
  }
  return FactorVector::from_entries(std::move(entries));
}

}  // namespace

FactorVector factorize(const BigInt& m) {
  if (m < 1) throw std::invalid_argument("factorize requires a positive integer");
  if (m.fits_ulong_p()) return factorize_u64(m.get_ui());

  std::vector<FactorVector::Entry> entries;
  BigInt rest = m;
  for (std::uint32_t i = 1; rest > 1; ++i) {
    if (rest.fits_ulong_p()) {
      FactorVector tail = factorize_u64(rest.get_ui());
      for (const auto& e : tail.entries()) entries.push_back(e);
      break;
    }
    std::uint64_t p = nth_prime(i);
    std::uint64_t e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) entries.push_back({i, e});
  }
  return FactorVector::from_entries(std::move(entries));
}

std::uint32_t gpf(const BigInt& m) {
  if (m < 1) throw std::invalid_argument("gpf requires a positive integer");
  if (m == 1) return 1;
  return factorize(m).max_index();
}

BigInt to_integer(const FactorVector& f) {
  BigInt out = 1;
  BigInt term;
  for (const FactorVector::Entry& e : f.entries()) {
    mpz_ui_pow_ui(term.get_mpz_t(), nth_prime(e.prime_index), e.exponent);
    out *= term;
  }
  return out;
}

}  // namespace unaryp
