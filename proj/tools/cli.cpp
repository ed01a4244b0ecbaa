#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "unaryp/complexity.hpp"
#include "unaryp/format.hpp"
#include "unaryp/monoid.hpp"
#include "unaryp/semantics.hpp"
#include "unaryp/system.hpp"

namespace unaryp::cli {

namespace {

constexpr std::uint64_t kMaxLiteralLength = 1'000'000;

std::optional<std::string> read_source(const std::string& path, std::istream& in,
                                       std::ostream& err, bool& used_stdin) {
  if (path == "-") {
    if (used_stdin) {
      err << "error: only one input may come from standard input\n";
      return std::nullopt;
    }
    used_stdin = true;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::optional<GeneralPSystem> load_system(const std::string& path, std::istream& in,
                                          std::ostream& err, bool& used_stdin) {
  auto source = read_source(path, in, err, used_stdin);
  if (!source) return std::nullopt;
  const std::string name = path == "-" ? "<stdin>" : path;
  ParseResult result = parse_system(*source);
  if (!result.ok()) {
    for (const auto& d : result.diagnostics)
      err << name << ":" << d.line << ":" << d.column << ": " << d.message << "\n";
    return std::nullopt;
  }
  auto diags = validate(result.document->system);
  if (!diags.empty()) {
    for (const auto& d : diags)
      err << name << ": " << d.field << ": " << d.message << "\n";
    return std::nullopt;
  }
  return std::move(result.document->system);
}

std::optional<UnaryPSystem> need_unary(const GeneralPSystem& sys, std::ostream& err) {
  auto unary = as_unary(sys);
  if (!unary)
    err << "error: this operation needs a unary system (one-symbol alphabet)\n";
  return unary;
}

std::optional<BigInt> positive_arg(const std::string& text, const char* what,
                                   std::ostream& err) {
  auto value = parse_bigint(text);
  if (!value || *value < 1) {
    err << "error: " << what << " must be a positive integer\n";
    return std::nullopt;
  }
  return value;
}

int print_unary_members(const std::vector<BigInt>& members, const std::string& symbol,
                        bool as_string, std::ostream& out, std::ostream& err) {
  if (as_string) {
    for (const BigInt& m : members) {
      if (m > kMaxLiteralLength) {
        err << "error: member " << m << " is too long to print as a string\n";
        return 2;
      }
    }
    for (const BigInt& m : members) {
      std::string line;
      for (std::uint64_t i = 0, n = m.get_ui(); i < n; ++i) line += symbol;
      out << line << "\n";
    }
    return 0;
  }
  for (const BigInt& m : members) out << m << "\n";
  return 0;
}

int print_general_members(const std::vector<ParikhVector>& members,
                          const std::vector<std::string>& alphabet, bool as_string,
                          std::ostream& out, std::ostream& err) {
  if (as_string) {
    for (const ParikhVector& v : members) {
      BigInt total = 0;
      for (const BigInt& c : v) total += c;
      if (total > kMaxLiteralLength) {
        err << "error: a member is too long to print as a string\n";
        return 2;
      }
    }
  }
  for (const ParikhVector& v : members) {
    std::string line;
    for (std::size_t s = 0; s < alphabet.size(); ++s) {
      if (as_string) {
        for (std::uint64_t i = 0, n = v[s].get_ui(); i < n; ++i) line += alphabet[s];
      } else {
        if (s > 0) line += " ";
        line += alphabet[s] + "^" + to_string(v[s]);
      }
    }
    out << line << "\n";
  }
  return 0;
}

// First element of the symmetric difference of two ascending sequences.
struct DiffMember {
  BigInt value;
  bool in_first = false;
};

std::optional<DiffMember> first_difference(const std::vector<BigInt>& a,
                                           const std::vector<BigInt>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) return DiffMember{a[i], true};
    if (i == a.size() || b[j] < a[i]) return DiffMember{b[j], false};
    ++i;
    ++j;
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Toolkit for self-reproducing P systems with a linear membrane "
               "structure: simulation, canonical forms, minimization, "
               "equivalence and size trade-offs."};
  app.name("unaryp");
  app.require_subcommand(1);

  std::string file, file2, out_path, mode = "star", bound_str, member_str;
  std::vector<std::size_t> order;
  bool as_json = false, as_string = false, with_table = false, with_machine = false;
  std::size_t times = 1;
  std::uint64_t family_m = 0;
  std::size_t family_n = 0;

  auto* parse_cmd =
      app.add_subcommand("parse", "Validate a description and echo its normalized form");
  parse_cmd->add_option("file", file, "input file or '-' for stdin")->required();
  parse_cmd->add_flag("--json", as_json, "emit the JSON mirror instead");

  auto* size_cmd = app.add_subcommand("size", "Print the size measure");
  size_cmd->add_option("file", file)->required();

  auto* enum_cmd = app.add_subcommand("enum", "Enumerate members up to a bound");
  enum_cmd->add_option("--mode", mode, "star (default) or plus")
      ->check(CLI::IsMember({"star", "plus"}));
  enum_cmd->add_option("--bound", bound_str, "total symbol count bound")->required();
  enum_cmd->add_flag("--as-string", as_string, "print literal strings");
  enum_cmd->add_option("file", file)->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Enumerate via the membrane-level simulator");
  simulate_cmd->add_option("--bound", bound_str)->required();
  simulate_cmd->add_flag("--as-string", as_string);
  simulate_cmd->add_option("file", file)->required();

  auto* member_cmd = app.add_subcommand("member", "Decide membership of a^m");
  member_cmd->add_option("--mode", mode)->check(CLI::IsMember({"star", "plus"}));
  member_cmd->add_option("-m,--member", member_str, "member length m")->required();
  member_cmd->add_option("file", file)->required();

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form");
  canon_cmd->add_option("file", file)->required();

  auto* minimize_cmd =
      app.add_subcommand("minimize", "Print the minimized equivalent system");
  minimize_cmd->add_option("file", file)->required();
  minimize_cmd->add_option("-o,--output", out_path, "write to a file instead");

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide language equivalence");
  equiv_cmd->add_option("--mode", mode, "star, plus, plus-star or star-plus")
      ->check(CLI::IsMember({"star", "plus", "plus-star", "star-plus"}));
  equiv_cmd->add_option("file1", file)->required();
  equiv_cmd->add_option("file2", file2)->required();

  auto* convert_cmd = app.add_subcommand("convert", "Rewrite a system");
  convert_cmd->require_subcommand(1);
  auto* plus_to_star_cmd = convert_cmd->add_subcommand(
      "plus-to-star", "Fold one application of every homomorphism into the axiom");
  plus_to_star_cmd->add_option("file", file)->required();

  auto* permute_cmd = app.add_subcommand("permute", "Reorder the homomorphisms");
  permute_cmd->add_option("--order", order, "1-based permutation, e.g. 2,1,3")
      ->required()
      ->delimiter(',');
  permute_cmd->add_option("file", file)->required();

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Remove removable homomorphisms, growing the axiom");
  reduce_cmd->add_option("--times", times, "number of reduction steps (default 1)")
      ->check(CLI::PositiveNumber);
  reduce_cmd->add_flag("--table", with_table, "append the aligned size table");
  reduce_cmd->add_flag("--machine", with_machine, "append machine-readable lines");
  reduce_cmd->add_option("file", file)->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "Context-free classification of the language");
  classify_cmd->add_option("file", file)->required();

  auto* family_cmd = app.add_subcommand("family", "Emit a built-in system family");
  family_cmd->require_subcommand(1);
  auto* worst_cmd = family_cmd->add_subcommand(
      "worst-case", "n homomorphisms a->a^m with axiom a^m");
  worst_cmd->add_option("--m", family_m, "exponent m >= 2")->required();
  worst_cmd->add_option("--n", family_n, "homomorphism count n >= 1")->required();
  auto* prime_cmd = family_cmd->add_subcommand(
      "prime-power", "n symbols, homomorphism i raises symbol i to the i-th prime");
  prime_cmd->add_option("--n", family_n, "symbol count n >= 1")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  bool used_stdin = false;
  try {
    if (*parse_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      out << (as_json ? serialize_json(*sys) : serialize(*sys));
      return 0;
    }

    if (*size_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      out << system_size(*sys) << "\n";
      return 0;
    }

    if (*enum_cmd || *simulate_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto bound = positive_arg(bound_str, "--bound", err);
      if (!bound) return 2;
      std::vector<ParikhVector> members;
      if (*simulate_cmd) {
        members = simulate_reachable(*sys, *bound);
      } else if (mode == "plus") {
        members = enumerate_plus(*sys, *bound);
      } else {
        members = enumerate_star(*sys, *bound);
      }
      if (sys->alphabet.size() == 1) {
        std::vector<BigInt> lengths;
        lengths.reserve(members.size());
        for (ParikhVector& v : members) lengths.push_back(std::move(v[0]));
        std::sort(lengths.begin(), lengths.end());
        return print_unary_members(lengths, sys->alphabet[0], as_string, out, err);
      }
      return print_general_members(members, sys->alphabet, as_string, out, err);
    }

    if (*member_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto unary = need_unary(*sys, err);
      if (!unary) return 2;
      auto m = positive_arg(member_str, "-m", err);
      if (!m) return 2;
      auto witness = mode == "plus" ? member_plus(*unary, *m) : member_star(*unary, *m);
      if (!witness) {
        out << "no\n";
        return 1;
      }
      for (std::size_t i = 0; i < witness->size(); ++i)
        out << (i ? " " : "") << (*witness)[i];
      out << "\n";
      return 0;
    }

    if (*canon_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto unary = need_unary(*sys, err);
      if (!unary) return 2;
      out << serialize(canonicalize(*unary));
      return 0;
    }

    if (*minimize_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto unary = need_unary(*sys, err);
      if (!unary) return 2;
      std::string text = serialize(to_general(minimize(*unary), sys->alphabet[0]));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
          err << "error: cannot write '" << out_path << "'\n";
          return 2;
        }
        f << text;
      }
      return 0;
    }

    if (*equiv_cmd) {
      auto sys1 = load_system(file, in, err, used_stdin);
      if (!sys1) return 2;
      auto sys2 = load_system(file2, in, err, used_stdin);
      if (!sys2) return 2;
      auto u1 = need_unary(*sys1, err);
      if (!u1) return 2;
      auto u2 = need_unary(*sys2, err);
      if (!u2) return 2;
      Semantics sem1 = Semantics::star, sem2 = Semantics::star;
      if (mode == "plus") sem1 = sem2 = Semantics::plus;
      if (mode == "plus-star") sem1 = Semantics::plus;
      if (mode == "star-plus") sem2 = Semantics::plus;
      if (equivalent(*u1, sem1, *u2, sem2)) {
        out << "equivalent\n";
        return 0;
      }
      out << "not equivalent\n";
      // Witness search with an automatic bound; the decision above never
      // depends on it.
      BigInt max_coeff = 1;
      for (const BigInt& c : u1->coeffs) max_coeff = std::max(max_coeff, c);
      for (const BigInt& c : u2->coeffs) max_coeff = std::max(max_coeff, c);
      BigInt bound = u1->axiom_len * u2->axiom_len * max_coeff * max_coeff;
      bound = std::min(bound, BigInt(1'000'000));
      auto enumerate = [&](const UnaryPSystem& u, Semantics sem) {
        return sem == Semantics::plus ? enumerate_plus(u, bound)
                                      : enumerate_star(u, bound);
      };
      auto diff = first_difference(enumerate(*u1, sem1), enumerate(*u2, sem2));
      if (diff) {
        out << "distinguishing member: " << diff->value << " ("
            << (diff->in_first ? "first" : "second") << " input only)\n";
      } else {
        out << "no distinguishing member up to bound " << bound << "\n";
      }
      return 1;
    }

    if (*convert_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      out << serialize(plus_to_star(*sys));
      return 0;
    }

    if (*permute_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      out << serialize(permute(*sys, order));
      return 0;
    }

    if (*reduce_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto unary = need_unary(*sys, err);
      if (!unary) return 2;
      TradeoffReport report = reduce_report(*unary, times);
      if (report.reduced_sizes.empty()) {
        out << "no reducible column\n";
        return 1;
      }
      BigInt before = report.original_size;
      for (std::size_t i = 0; i < report.reduced_sizes.size(); ++i) {
        const BigInt& after = report.reduced_sizes[i].second;
        out << "size " << before << " -> " << after << "; bound "
            << before * before - 1 << ": "
            << (report.bound_checks[i].satisfied ? "ok" : "violated") << "\n";
        before = after;
      }
      if (with_table) out << format_table(report);
      if (with_machine) out << format_machine(report);
      return 0;
    }

    if (*classify_cmd) {
      auto sys = load_system(file, in, err, used_stdin);
      if (!sys) return 2;
      auto unary = need_unary(*sys, err);
      if (!unary) return 2;
      LanguageClass cls = classify_context_free(*unary);
      if (cls.singleton)
        out << "singleton " << cls.member << "\n";
      else
        out << "not context-free\n";
      return 0;
    }

    if (*family_cmd) {
      if (*worst_cmd) {
        out << serialize(to_general(worst_case_family(family_m, family_n)));
      } else {
        out << serialize(prime_power_family(family_n));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no command handled\n";
  return 2;
}

}  // namespace unaryp::cli
