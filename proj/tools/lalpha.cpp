// Command-line front end. Exit codes: 0 success or true, 1 false or
// ill-formed, 2 usage or parse errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "lalpha/debruijn.hpp"
#include "lalpha/freevars.hpp"
#include "lalpha/harness.hpp"
#include "lalpha/normalforms.hpp"
#include "lalpha/rewrite.hpp"
#include "lalpha/syntax.hpp"
#include "lalpha/typing.hpp"

using namespace lalpha;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string path_text(const Path& p) {
  std::string out = "[";
  const auto ix = path_indices(p);
  for (std::size_t i = 0; i < ix.size(); ++i) out += (i ? "," : "") + std::to_string(ix[i]);
  return out + "]";
}

Context context_or_fv(const std::string& text, const Term& a) {
  if (!text.empty()) return parse_context(text);
  if (auto f = fv(a)) return *f;
  throw IllFormed("fv is undefined, so no context can derive the term");
}

RuleSet rules_named(const std::string& name) {
  if (auto r = RuleSet::named(name)) return *r;
  throw Usage("unknown rule set '" + name + "' (sigma, sigma-alpha, sigma-beta, full)");
}

int cmd_check(const std::string& term, const std::string& ctx_text) {
  const Term a = parse_term(term);
  const Context ctx = context_or_fv(ctx_text, a);
  try {
    std::cout << print_derivation(derive(ctx, a));
    return kTrue;
  } catch (const NotDerivable& e) {
    std::cout << "not derivable in " << print_context(ctx) << " at " << path_text(e.path()) << ": " << e.reason()
              << "\n";
    return kFalse;
  }
}

int cmd_fv(const std::string& term) {
  const auto f = fv(parse_term(term));
  std::cout << (f ? print_context(*f) : "undefined") << "\n";
  return f ? kTrue : kFalse;
}

int cmd_good(const std::string& term) {
  const bool g = is_good(parse_term(term));
  std::cout << (g ? "yes" : "no") << "\n";
  return g ? kTrue : kFalse;
}

int cmd_reduce(const std::string& term, const std::string& ctx_text, const std::string& rules,
               const std::string& strategy, std::optional<std::size_t> steps, const std::string& trace) {
  const Term a = parse_term(term);
  const RuleSet rs = rules_named(rules);
  const auto st = Strategy::parse(strategy);
  if (!st) throw Usage("unknown strategy '" + strategy + "' (lo, ri, index:K)");
  if (!trace.empty() && trace != "text" && trace != "json") throw Usage("--trace takes text or json");
  if (!ctx_text.empty()) {
    const Context ctx = parse_context(ctx_text);
    if (!derivable(ctx, a)) {
      std::cerr << "not derivable in " << print_context(ctx) << "\n";
      return kFalse;
    }
  }
  const Normalized n = normalize(a, rs, *st, steps.value_or(10000));
  if (trace == "json") {
    std::cout << trace_to_json(n.trace) << "\n";
  } else {
    if (trace == "text") std::cout << trace_to_text(n.trace);
    std::cout << print_term(n.term) << "\n";
  }
  return kTrue;
}

int cmd_normalize(const std::string& term, const std::string& rules, std::size_t fuel) {
  const Normalized n = normalize(parse_term(term), rules_named(rules), Strategy::lo(), fuel);
  std::cout << print_term(n.term) << "\n";
  if (n.exhausted) {
    std::cerr << "fuel exhausted after " << fuel << " steps\n";
    return kFalse;
  }
  return kTrue;
}

int cmd_translate(const std::string& term, const std::string& ctx_text, const std::string& calculus,
                  const std::string& notation) {
  Flavor flavor;
  if (calculus == "upsilon") {
    flavor = Flavor::UpsilonPrime;
  } else if (calculus == "upsilon2") {
    flavor = Flavor::Upsilon2;
  } else {
    throw Usage("--calculus takes upsilon or upsilon2");
  }
  Notation nt;
  if (notation == "bracket") {
    nt = Notation::Bracket;
  } else if (notation == "compose") {
    nt = Notation::Compose;
  } else {
    throw Usage("--notation takes bracket or compose");
  }
  const Term a = parse_term(term);
  const Context ctx = parse_context(ctx_text);
  try {
    std::cout << print_db(translate_term(ctx, a, flavor), nt) << "\n";
    return kTrue;
  } catch (const NotDerivable& e) {
    std::cout << "not derivable in " << print_context(ctx) << " at " << path_text(e.path()) << ": " << e.reason()
              << "\n";
    return kFalse;
  }
}

int cmd_equiv(const std::string& lhs, const std::string& rhs, const std::string& ctx_text) {
  const Term a = parse_term(lhs);
  const Term b = parse_term(rhs);
  std::string why;
  const bool eq = ctx_text.empty() ? equiv_alpha(a, b, &why) : equiv_gamma(a, b, parse_context(ctx_text), &why);
  std::cout << (eq ? "true" : "false") << "\n";
  if (!why.empty()) std::cerr << why << "\n";
  return eq ? kTrue : kFalse;
}

int cmd_nf(const std::string& term) {
  const Term a = parse_term(term);
  const bool sigma = is_sigma_nf(a);
  std::cout << "sigma-nf: " << (sigma ? "yes" : "no") << "\n";
  try {
    to_pure(a);
    std::cout << "pure: yes\n";
  } catch (const ContainsBlock& e) {
    std::cout << "pure: no (" << print_term(e.offending()) << " at " << path_text(e.path()) << ")\n";
  }
  return sigma ? kTrue : kFalse;
}

int cmd_test(const std::string& suite, const SuiteConfig& cfg, const std::string& format) {
  if (!is_suite(suite)) {
    std::string names;
    for (const auto& n : suite_names()) names += " " + n;
    throw Usage("unknown suite '" + suite + "'; one of:" + names);
  }
  if (format != "text" && format != "json") throw Usage("--format takes text or json");
  const TrialReport r = run_suite(suite, cfg);
  std::cout << (format == "json" ? r.to_json() + "\n" : r.to_text());
  return r.ok() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lalpha: a named calculus of explicit substitutions"};
  app.require_subcommand(1);

  std::string term, term2, ctx, rules, strategy = "lo", trace, calculus = "upsilon", notation = "bracket";
  std::string suite, format = "text";
  std::optional<std::size_t> steps;
  std::size_t fuel = 10000;
  bool alpha = false;
  SuiteConfig scfg;

  auto* check = app.add_subcommand("check", "print the derivation of CONTEXT |- TERM");
  check->add_option("TERM", term)->required();
  check->add_option("--context", ctx, "defaults to fv(TERM)");

  auto* fvc = app.add_subcommand("fv", "least context deriving TERM");
  fvc->add_option("TERM", term)->required();

  auto* good = app.add_subcommand("good", "derivable with an empty local part?");
  good->add_option("TERM", term)->required();

  auto* reduce = app.add_subcommand("reduce", "rewrite under a strategy");
  reduce->add_option("TERM", term)->required();
  reduce->add_option("--context", ctx);
  reduce->add_option("--rules", rules, "sigma, sigma-alpha, sigma-beta or full")->default_val("full");
  reduce->add_option("--strategy", strategy, "lo, ri or index:K")->default_val("lo");
  reduce->add_option("--steps", steps, "stop after N steps (default 10000)");
  reduce->add_option("--trace", trace, "text or json");

  auto* norm = app.add_subcommand("normalize", "leftmost-outermost normal form");
  norm->add_option("TERM", term)->required();
  norm->add_option("--rules", rules)->default_val("full");
  norm->add_option("--fuel", fuel)->default_val(10000);

  auto* tr = app.add_subcommand("translate", "de Bruijn translation");
  tr->add_option("TERM", term)->required();
  tr->add_option("--context", ctx)->required();
  tr->add_option("--calculus", calculus, "upsilon or upsilon2")->default_val("upsilon");
  tr->add_option("--notation", notation, "bracket or compose")->default_val("bracket");

  auto* eq = app.add_subcommand("equiv", "compare translations");
  eq->add_option("A", term)->required();
  eq->add_option("B", term2)->required();
  auto* eq_ctx = eq->add_option("--context", ctx);
  auto* eq_alpha = eq->add_flag("--alpha", alpha, "compare over the union of the free names (default)");
  eq_ctx->excludes(eq_alpha);

  auto* nf = app.add_subcommand("nf", "sigma-normal form and purity tests");
  nf->add_option("TERM", term)->required();

  auto* test = app.add_subcommand("test", "run a property suite");
  test->add_option("SUITE", suite)->required();
  test->add_option("--seed", scfg.seed)->default_val(0);
  test->add_option("--count", scfg.count)->default_val(1000);
  test->add_option("--size", scfg.size)->default_val(40)->check(CLI::PositiveNumber);
  test->add_option("--fuel", scfg.fuel)->default_val(10000)->check(CLI::PositiveNumber);
  test->add_option("--format", format, "text or json")->default_val("text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*check) return cmd_check(term, ctx);
    if (*fvc) return cmd_fv(term);
    if (*good) return cmd_good(term);
    if (*reduce) return cmd_reduce(term, ctx, rules, strategy, steps, trace);
    if (*norm) return cmd_normalize(term, rules, fuel);
    if (*tr) return cmd_translate(term, ctx, calculus, notation);
    if (*eq) return cmd_equiv(term, term2, ctx);
    if (*nf) return cmd_nf(term);
    if (*test) return cmd_test(suite, scfg, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const Usage& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const IllFormed& e) {
    std::cerr << e.what() << "\n";
    return kFalse;
  } catch (const NotDerivable& e) {
    std::cerr << "not derivable: " << e.what() << "\n";
    return kFalse;
  }
  return kUsage;
}
