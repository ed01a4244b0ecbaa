#include "unaryp/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace unaryp {

MonoidRepr build_repr(const UnaryPSystem& sys) {
  require_valid(sys);
  MonoidRepr repr;
  repr.offset = factorize(sys.axiom_len);
  repr.max_prime_index = std::max<std::uint32_t>(1, repr.offset.max_index());
  for (const BigInt& c : sys.coeffs) {
    if (c == 1)
      throw std::invalid_argument(
          "identity homomorphisms must be stripped before building the "
          "monoid representation");
    FactorVector column = factorize(c);
    repr.max_prime_index = std::max(repr.max_prime_index, column.max_index());
    repr.columns.push_back(std::move(column));
  }
  return repr;
}

namespace {

// Depth-first search over multiplicity vectors. Each used column strictly
// shrinks the residual's total, which bounds the depth; failed
// (position, residual) states are memoized.
class CombinationSearch {
 public:
  explicit CombinationSearch(std::span<const FactorVector> columns)
      : columns_(columns) {}

  std::optional<std::vector<std::uint64_t>> run(const FactorVector& target,
                                                std::uint64_t min_total) {
    // A residual coordinate no column touches can never be cleared.
    for (const auto& e : target.entries()) {
      bool covered = false;
      for (const FactorVector& c : columns_) {
        if (c.exponent(e.prime_index) > 0) {
          covered = true;
          break;
        }
      }
      if (!covered) return std::nullopt;
    }
    counts_.assign(columns_.size(), 0);
    if (search(0, target, min_total)) return counts_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t pos, const FactorVector& rest, std::uint64_t still_needed) {
    if (rest.empty() && still_needed == 0) {
      for (std::size_t j = pos; j < columns_.size(); ++j) counts_[j] = 0;
      return true;
    }
    if (pos == columns_.size()) return false;
    auto key = std::make_pair(pos, rest);
    if (failed_.count(key) && still_needed == 0) return false;

    const FactorVector& col = columns_[pos];
    if (col.empty()) {  // zero column: contributes nothing
      counts_[pos] = 0;
      return search(pos + 1, rest, still_needed);
    }
    std::vector<FactorVector> residuals = {rest};
    while (auto next = residuals.back().minus(col)) residuals.push_back(*next);
    for (std::size_t t = residuals.size(); t-- > 0;) {
      counts_[pos] = t;
      if (search(pos + 1, residuals[t], still_needed > t ? still_needed - t : 0))
        return true;
    }
    if (still_needed == 0) failed_.insert(key);
    return false;
  }

  std::span<const FactorVector> columns_;
  std::vector<std::uint64_t> counts_;
  std::set<std::pair<std::size_t, FactorVector>> failed_;
};

}  // namespace

std::optional<std::vector<std::uint64_t>> find_combination(
    std::span<const FactorVector> columns, const FactorVector& target) {
  return CombinationSearch(columns).run(target, 0);
}

std::optional<std::vector<std::uint64_t>> monoid_member(const MonoidRepr& repr,
                                                        const FactorVector& x) {
  return find_combination(repr.columns, x);
}

bool is_irreducible(const MonoidRepr& repr, const FactorVector& x) {
  if (x.empty())
    throw std::invalid_argument("irreducibility is defined on non-zero elements");
  // Reducible iff some column can be split off leaving another non-zero
  // monoid element; total multiplicity >= 2 is exactly that.
  return !CombinationSearch(repr.columns).run(x, 2).has_value();
}

CanonicalForm canonicalize(const UnaryPSystem& sys) {
  require_valid(sys);
  auto stripped = strip_identities(sys).first;
  CanonicalForm form;
  form.offset = factorize(stripped.axiom_len);
  if (stripped.coeffs.empty()) return form;

  MonoidRepr repr = build_repr(stripped);
  std::vector<FactorVector> distinct = repr.columns;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (FactorVector& column : distinct) {
    if (is_irreducible(repr, column)) form.generators.push_back(std::move(column));
  }
  return form;
}

UnaryPSystem rebuild(const CanonicalForm& form) {
  UnaryPSystem sys;
  sys.axiom_len = to_integer(form.offset);
  sys.coeffs.reserve(form.generators.size());
  for (const FactorVector& g : form.generators) sys.coeffs.push_back(to_integer(g));
  return sys;
}

UnaryPSystem minimize(const UnaryPSystem& sys) { return rebuild(canonicalize(sys)); }

bool equivalent_star(const UnaryPSystem& a, const UnaryPSystem& b) {
  return canonicalize(a) == canonicalize(b);
}

bool equivalent_plus(const UnaryPSystem& a, const UnaryPSystem& b) {
  return equivalent_star(plus_to_star(a), plus_to_star(b));
}

bool equivalent(const UnaryPSystem& a, Semantics sem_a,
                const UnaryPSystem& b, Semantics sem_b) {
  UnaryPSystem left = sem_a == Semantics::plus ? plus_to_star(a) : a;
  UnaryPSystem right = sem_b == Semantics::plus ? plus_to_star(b) : b;
  return equivalent_star(left, right);
}

LanguageClass classify_context_free(const UnaryPSystem& sys) {
  CanonicalForm form = canonicalize(sys);
  LanguageClass out;
  out.singleton = form.generators.empty();
  if (out.singleton) out.member = to_integer(form.offset);
  return out;
}

std::string serialize(const CanonicalForm& form) {
  std::string out = "offset: " + to_string(to_integer(form.offset)) + "\n";
  std::vector<BigInt> values;
  values.reserve(form.generators.size());
  for (const FactorVector& g : form.generators) values.push_back(to_integer(g));
  std::sort(values.begin(), values.end());
  for (const BigInt& v : values) out += "gen: " + to_string(v) + "\n";
  return out;
}

}  // namespace unaryp
