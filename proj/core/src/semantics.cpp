#include "unaryp/semantics.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

#include "unaryp/factor.hpp"
#include "unaryp/monoid.hpp"

namespace unaryp {

namespace {

void check_bound(const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
}

BigInt total_count(const ParikhVector& v) {
  BigInt t = 0;
  for (const BigInt& x : v) t += x;
  return t;
}

}  // namespace

std::vector<BigInt> enumerate_star(const UnaryPSystem& sys, const BigInt& bound) {
  check_bound(bound);
  require_valid(sys);
  // Identities are dropped up front; every remaining action strictly grows
  // the member, so the closure below bound is finite.
  UnaryPSystem stripped = strip_identities(sys).first;
  std::set<BigInt> seen;
  std::deque<BigInt> queue;
  if (stripped.axiom_len <= bound) {
    seen.insert(stripped.axiom_len);
    queue.push_back(stripped.axiom_len);
  }
  while (!queue.empty()) {
    BigInt cur = std::move(queue.front());
    queue.pop_front();
    for (const BigInt& c : stripped.coeffs) {
      BigInt next = cur * c;
      if (next <= bound && seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<BigInt> enumerate_plus(const UnaryPSystem& sys, const BigInt& bound) {
  // One mandatory application of every homomorphism folds into the axiom.
  return enumerate_star(plus_to_star(sys), bound);
}

std::vector<ParikhVector> enumerate_star(const GeneralPSystem& sys, const BigInt& bound) {
  check_bound(bound);
  require_valid(sys);
  GeneralPSystem stripped = strip_identities(sys).first;
  std::set<ParikhVector> seen;
  std::deque<ParikhVector> queue;
  if (total_count(stripped.axiom) <= bound) {
    seen.insert(stripped.axiom);
    queue.push_back(stripped.axiom);
  }
  while (!queue.empty()) {
    ParikhVector cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& hom : stripped.homs) {
      ParikhVector next = cur;
      for (std::size_t s = 0; s < next.size(); ++s) next[s] *= hom[s];
      if (total_count(next) <= bound && seen.insert(next).second)
        queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ParikhVector> enumerate_plus(const GeneralPSystem& sys, const BigInt& bound) {
  return enumerate_star(plus_to_star(sys), bound);
}

namespace {

// Witness for the stripped system mapped back onto the original
// homomorphism positions; identities get count `identity_count`.
std::vector<std::uint64_t> spread_witness(const UnaryPSystem& sys,
                                          const std::vector<std::uint64_t>& stripped,
                                          std::uint64_t identity_count) {
  std::vector<std::uint64_t> out(sys.coeffs.size(), identity_count);
  std::size_t k = 0;
  for (std::size_t i = 0; i < sys.coeffs.size(); ++i) {
    if (sys.coeffs[i] != 1) out[i] = stripped[k++];
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> member_star(const UnaryPSystem& sys,
                                                      const BigInt& m) {
  if (m < 1) throw std::invalid_argument("members are positive lengths");
  require_valid(sys);
  MonoidRepr repr = build_repr(strip_identities(sys).first);
  auto rest = factorize(m).minus(repr.offset);
  if (!rest) return std::nullopt;
  auto witness = monoid_member(repr, *rest);
  if (!witness) return std::nullopt;
  return spread_witness(sys, *witness, 0);
}

std::optional<std::vector<std::uint64_t>> member_plus(const UnaryPSystem& sys,
                                                      const BigInt& m) {
  auto star = member_star(plus_to_star(sys), m);
  if (!star) return std::nullopt;
  for (std::uint64_t& e : *star) ++e;  // undo the folded-in first application
  return star;
}

std::vector<ParikhVector> simulate_reachable(const GeneralPSystem& sys,
                                             const BigInt& bound) {
  check_bound(bound);
  require_valid(sys);
  const std::size_t n = sys.homs.size();
  std::set<std::pair<std::size_t, ParikhVector>> visited;
  std::deque<Configuration> queue;
  std::set<ParikhVector> halted;

  if (total_count(sys.axiom) <= bound) {
    visited.insert({n, sys.axiom});
    queue.push_back({n, sys.axiom});
  }
  while (!queue.empty()) {
    Configuration cur = std::move(queue.front());
    queue.pop_front();
    if (cur.depth == 0) {
      halted.insert(cur.contents);
      continue;
    }
    // Apply the homomorphism of the innermost intact region to every
    // object at once. Identity regions self-loop and are dropped by the
    // visited set.
    ParikhVector applied = cur.contents;
    const auto& hom = sys.homs[cur.depth - 1];
    for (std::size_t s = 0; s < applied.size(); ++s) applied[s] *= hom[s];
    if (total_count(applied) <= bound &&
        visited.insert({cur.depth, applied}).second)
      queue.push_back({cur.depth, std::move(applied)});
    // Or dissolve the membrane, releasing the contents one region out.
    if (visited.insert({cur.depth - 1, cur.contents}).second)
      queue.push_back({cur.depth - 1, std::move(cur.contents)});
  }
  return {halted.begin(), halted.end()};
}

std::vector<BigInt> simulate_reachable(const UnaryPSystem& sys, const BigInt& bound) {
  std::vector<BigInt> out;
  for (ParikhVector& v : simulate_reachable(to_general(sys), bound))
    out.push_back(std::move(v[0]));
  return out;
}

}  // namespace unaryp
