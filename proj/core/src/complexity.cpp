#include "unaryp/complexity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "unaryp/factor.hpp"
#include "unaryp/monoid.hpp"

namespace unaryp {

std::optional<UnaryPSystem> reduce_once(const UnaryPSystem& sys) {
  require_valid(sys);
  if (sys.coeffs.empty())
    throw std::invalid_argument("reduction needs at least one homomorphism");

  std::vector<FactorVector> columns;
  columns.reserve(sys.coeffs.size());
  for (const BigInt& c : sys.coeffs) columns.push_back(factorize(c));

  // A homomorphism is removable iff its column is generated by the others
  // (covers reducible, duplicate and identity columns alike). Among the
  // removable ones pick the smallest coefficient: folding it into the
  // axiom grows the system the least. Ties fall to the lowest index.
  std::optional<std::size_t> pick;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<FactorVector> others;
    others.reserve(columns.size() - 1);
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (i != j) others.push_back(columns[i]);
    if (!find_combination(others, columns[j])) continue;
    if (!pick || sys.coeffs[j] < sys.coeffs[*pick]) pick = j;
  }
  if (!pick) return std::nullopt;

  UnaryPSystem out;
  out.axiom_len = sys.axiom_len * sys.coeffs[*pick];
  for (std::size_t i = 0; i < sys.coeffs.size(); ++i)
    if (i != *pick) out.coeffs.push_back(sys.coeffs[i]);
  return out;
}

bool check_quadratic_bound(const UnaryPSystem& sys, const UnaryPSystem& reduced) {
  BigInt before = system_size(sys);
  return system_size(reduced) <= before * before - 1;
}

UnaryPSystem worst_case_family(std::uint64_t m, std::size_t n) {
  if (m < 2) throw std::invalid_argument("the family needs m >= 2");
  if (n < 1) throw std::invalid_argument("the family needs n >= 1");
  UnaryPSystem sys;
  sys.axiom_len = m;
  sys.coeffs.assign(n, BigInt(m));
  return sys;
}

std::pair<BigInt, BigInt> iterated_reduction_sizes(std::uint64_t m, std::size_t n,
                                                   std::size_t x) {
  if (x < 1 || x > n - 1 || n < 2)
    throw std::invalid_argument("iterated reduction needs 1 <= x <= n-1");
  UnaryPSystem sys = worst_case_family(m, n);
  BigInt before = system_size(sys);
  for (std::size_t step = 0; step < x; ++step) {
    auto reduced = reduce_once(sys);
    if (!reduced)
      throw std::logic_error("worst-case family stopped being reducible early");
    sys = std::move(*reduced);
  }
  return {before, system_size(sys)};
}

GeneralPSystem prime_power_family(std::size_t n) {
  if (n < 1) throw std::invalid_argument("the family needs n >= 1");
  GeneralPSystem sys;
  for (std::size_t i = 1; i <= n; ++i)
    sys.alphabet.push_back("a" + std::to_string(i));
  sys.axiom.assign(n, BigInt(1));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<BigInt> hom(n, BigInt(1));
    hom[i - 1] = nth_prime(static_cast<std::uint32_t>(i));
    sys.homs.push_back(std::move(hom));
  }
  return sys;
}

TradeoffReport reduce_report(const UnaryPSystem& sys, std::size_t times) {
  TradeoffReport report;
  report.original_homs = sys.coeffs.size();
  report.original_size = system_size(sys);
  UnaryPSystem current = sys;
  for (std::size_t step = 0; step < times; ++step) {
    auto reduced = reduce_once(current);
    if (!reduced) break;
    BigInt before = system_size(current);
    current = std::move(*reduced);
    report.reduced_sizes.emplace_back(current.coeffs.size(), system_size(current));
    report.bound_checks.push_back(
        {"step " + std::to_string(step + 1) + ": size <= " + to_string(before) +
             "^2 - 1",
         system_size(current) <= before * before - 1});
  }
  return report;
}

std::string format_table(const TradeoffReport& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back(std::to_string(report.original_homs),
                    to_string(report.original_size));
  for (const auto& [homs, size] : report.reduced_sizes)
    rows.emplace_back(std::to_string(homs), to_string(size));

  std::size_t w_homs = 4, w_size = 4;  // headers "homs", "size"
  for (const auto& [h, s] : rows) {
    w_homs = std::max(w_homs, h.size());
    w_size = std::max(w_size, s.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  out << pad("homs", w_homs) << "  " << pad("size", w_size) << "\n";
  for (const auto& [h, s] : rows)
    out << pad(h, w_homs) << "  " << pad(s, w_size) << "\n";
  for (const auto& check : report.bound_checks)
    out << check.id << ": " << (check.satisfied ? "ok" : "violated") << "\n";
  return out.str();
}

std::string format_machine(const TradeoffReport& report) {
  std::string out = "n=" + std::to_string(report.original_homs) +
                    " size=" + to_string(report.original_size) + "\n";
  for (const auto& [homs, size] : report.reduced_sizes)
    out += "n=" + std::to_string(homs) + " size=" + to_string(size) + "\n";
  return out;
}

}  // namespace unaryp
