#include "deloop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>

#include "deloop/constructions.hpp"
#include "deloop/cycles.hpp"
#include "deloop/notation.hpp"
#include "deloop/orientation.hpp"
#include "deloop/verify.hpp"

namespace deloop::cli {

namespace {

using nlohmann::json;

int sign_json(SignValue s) { return s.value(); }

json cycles_json(const Permutation& e) {
  json cycles = json::array();
  for (const auto& cycle : canonical_form(cycle_decompose(e))) {
    if (cycle.size() < 2) continue;
    json c = json::array();
    for (auto x : cycle) c.push_back(x.atom);
    cycles.push_back(c);
  }
  return cycles;
}

json check_json(const CheckResult& c) {
  json j = {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"cases", c.cases}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

void print_report(std::ostream& out, const VerifyReport& r) {
  out << r.construction << " (n = " << r.n << ", seed " << r.seed << ", " << r.seconds << " s)\n";
  for (const auto& c : r.checks) {
    out << "  " << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.cases
        << " cases]";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite deloopings of the sign homomorphism"};
  app.name("deloop");
  app.require_subcommand(1);

  std::string perm_text;
  std::size_t n = 0;
  bool as_json = false;

  auto* sign = app.add_subcommand("sign", "Print the sign of a permutation (+1 or -1)");
  sign->add_option("perm", perm_text, "Cycle or one-line notation")->required();

  auto* cycles = app.add_subcommand("cycles", "Canonical cycle decomposition");
  cycles->add_option("perm", perm_text, "Cycle or one-line notation")->required();
  cycles->add_flag("--json", as_json);

  auto* factor = app.add_subcommand("factor", "Transpositions whose product, left factor outermost, is the input");
  factor->add_option("perm", perm_text, "Cycle or one-line notation")->required();
  factor->add_flag("--json", as_json);

  auto* cartier = app.add_subcommand("cartier", "Relative inversions m(d, D_e(d)) and the induced sign");
  cartier->add_option("--n", n, "Size of the underlying set")->required()->check(CLI::Range(2, 11));
  cartier->add_option("perm", perm_text, "Permutation of {0, ..., n-1}")->required();
  cartier->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("orientation-dot", "DOT digraph of the canonical orientation, optionally acted on");
  dot->add_option("--n", n, "Size of the underlying set")->required()->check(CLI::Range(2, 11));
  dot->add_option("perm", perm_text, "Permutation acting on the canonical orientation");

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--n", vopts.n, "Size of the underlying set")
      ->required()
      ->check(CLI::Range(kVerifyMinN, kVerifyMaxN));
  verify->add_option("--construction", vopts.construction)
      ->check(CLI::IsMember({"all", "fixed", "orbit", "simpson", "cartier"}));
  verify->add_flag("--exhaustive-fixed", vopts.exhaustive_fixed, "Enumerate all 2^(n!) tables (n <= 4)");
  verify->add_option("--seed", vopts.seed, "Seed for the randomized checks");
  verify->add_flag("--json", as_json);

  auto* alternating = app.add_subcommand("alternating", "List the even permutations and their count");
  alternating->add_option("--n", n, "Size of the underlying set")->required()->check(CLI::Range(2, 8));
  alternating->add_flag("--json", as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kOk;
    err << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*sign) {
      out << sign_inversions(parse_permutation(perm_text)) << '\n';
      return kOk;
    }
    if (*cycles) {
      const auto e = parse_permutation(perm_text);
      if (as_json)
        out << json{{"n", e.size()}, {"cycles", cycles_json(e)}, {"sign", sign_json(sign_inversions(e))}}.dump()
            << '\n';
      else
        out << format_cycles(e) << '\n';
      return kOk;
    }
    if (*factor) {
      const auto e = parse_permutation(perm_text);
      const auto factors = factor_into_transpositions(e);
      if (as_json) {
        json list = json::array();
        for (const auto& t : factors) list.push_back({t.members()[0].atom, t.members()[1].atom});
        out << json{{"n", e.size()}, {"factors", list}, {"sign", sign_json(sign_inversions(e))}}.dump() << '\n';
      } else {
        out << format_transpositions(factors) << '\n';
      }
      return kOk;
    }
    if (*cartier) {
      const auto e = parse_permutation(perm_text, n);
      const auto d = canonical_orientation(e.domain());
      const auto m = relative_inversions(d, orientation_action(e, d));
      const auto s = SignValue::from_parity(m);
      if (as_json)
        out << json{{"n", n}, {"relative_inversions", m}, {"sign", sign_json(s)}, {"classes", 2}}.dump() << '\n';
      else
        out << "m(d, D_e(d)) = " << m << "\nsign " << s << '\n';
      return kOk;
    }
    if (*dot) {
      const auto fin = LabeledSet::fin(n);
      auto u = canonical_orientation(fin);
      if (!perm_text.empty()) u = orientation_action(parse_permutation(perm_text, n), u);
      out << "digraph orientation {\n";
      for (std::size_t i = 0; i < n; ++i) out << "  " << i << ";\n";
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const bool larger = u.chooses_larger(i, j);
          out << "  " << (larger ? i : j) << " -> " << (larger ? j : i) << ";\n";
        }
      out << "}\n";
      return kOk;
    }
    if (*verify) {
      const auto reports = run_verify(vopts);
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
      if (as_json) {
        json list = json::array();
        for (const auto& r : reports) {
          json checks = json::array();
          for (const auto& c : r.checks) checks.push_back(check_json(c));
          list.push_back({{"construction", r.construction}, {"passed", r.passed()}, {"seconds", r.seconds},
                          {"checks", checks}});
        }
        out << json{{"n", vopts.n}, {"seed", vopts.seed}, {"passed", ok}, {"reports", list}}.dump(2) << '\n';
      } else {
        for (const auto& r : reports) print_report(out, r);
        out << (ok ? "all checks passed" : "verification FAILED") << '\n';
      }
      return ok ? kOk : kVerificationFailed;
    }
    if (*alternating) {
      const auto kernel = alternating_kernel(n);
      if (as_json) {
        json list = json::array();
        for (const auto& e : kernel) list.push_back(cycles_json(e));
        out << json{{"n", n}, {"order", kernel.size()}, {"cycles", list}}.dump() << '\n';
      } else {
        out << "order " << kernel.size() << '\n';
        for (const auto& e : kernel) out << format_cycles(e) << '\n';
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace deloop::cli
