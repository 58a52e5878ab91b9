// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lalpha/freevars.hpp"
#include "lalpha/harness.hpp"
#include "lalpha/rewrite.hpp"
#include "support.hpp"

using namespace lalpha;
using support::C;
using support::T;

namespace {

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> problems;
  void operator()(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::vector<RuleId> rules_of(const Trace& t) {
  std::vector<RuleId> out;
  for (const auto& s : t.steps) out.push_back(s.rule);
  return out;
}

std::string rule_list(const Trace& t) {
  std::string out;
  for (const auto& s : t.steps) out += std::string(out.empty() ? "" : ",") + rule_id_name(s.rule);
  return out;
}

// Runs a suite and records a problem unless it has no failures.
TrialReport suite(Check& check, const std::string& name, std::size_t count, std::size_t fuel = 10000,
                  std::uint64_t seed = 0) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.count = count;
  cfg.size = 40;
  cfg.fuel = fuel;
  const TrialReport r = run_suite(name, cfg);
  std::ostringstream os;
  os << name << ": " << r.passes << "/" << r.trials << " passed, " << r.failed << " failed, " << r.inconclusive
     << " inconclusive";
  check(r.failed == 0, os.str());
  std::printf("    %s\n", os.str().c_str());
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    std::printf("    first counterexample #%zu: %s in %s: %s\n", static_cast<std::size_t>(f.index), f.term.c_str(),
                f.context.c_str(), f.detail.c_str());
  }
  return r;
}

void criterion1(Check& check) {
  const auto full = RuleSet::full();
  const auto lo = Strategy::lo();
  auto n = normalize(T("(\\x.x) y"), full, lo, 100);
  check(n.term == T("y") && rules_of(n.trace) == std::vector<RuleId>{RuleId::Beta, RuleId::Var},
        "identity applied: " + print_term(n.term) + " via " + rule_list(n.trace));

  n = normalize(T("(\\x.\\y.x) z"), full, lo, 100);
  check(n.term == T("\\y.z") && rules_of(n.trace) == std::vector<RuleId>{RuleId::Beta, RuleId::Lambda,
                                                                         RuleId::LiftShiftP, RuleId::Var, RuleId::W},
        "constant applied to z: " + print_term(n.term) + " via " + rule_list(n.trace));

  n = normalize(T("(\\x.\\y.x) y"), full, lo, 100);
  const std::vector<RuleId> third{RuleId::Beta, RuleId::Lambda, RuleId::LiftShiftP, RuleId::Var,
                                  RuleId::Alpha, RuleId::IdShift, RuleId::W};
  check(n.term == T("\\z.y") && rules_of(n.trace) == third,
        "constant applied to y: " + print_term(n.term) + " via " + rule_list(n.trace));

  n = normalize(T("(\\x.\\y\\z. x z (y z)) (\\x.\\y.x)"), full, lo, 1000);
  check(n.term == T("\\y.\\z.z") && !n.exhausted, "S K: " + print_term(n.term));
}

void criterion2(Check& check) {
  check(fv(T("\\x. x y")) == C("{y}"), "fv(\\x. x y)");
  check(fv(T("\\x. W x * x")) == C("{x}"), "fv(\\x. W x * x)");
  for (const char* a : {"z", "y", "x y", "\\z. z", "W y * x"}) {
    const std::string s = std::string("\\x. W y * ") + a;
    check(!fv(T(s)).has_value(), "fv(" + s + ") should be undefined");
  }
}

void criterion3(Check& check) {
  const std::vector<Context> chain{C("{z}; y"), C("{z,x}; y"), C("{z}; x,y"), C("{z,x}; x,y")};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      check(ctx_le(chain[i], chain[j]) == (i <= j),
            "chain order " + print_context(chain[i]) + " vs " + print_context(chain[j]));
    }
  }
  const auto s = ctx_sup(C("{x}; z"), C("{y,z}"));
  check(s == C("{x,y}; z"), "sup: " + (s ? print_context(*s) : std::string("undefined")));

  const std::vector<Var> names{"x", "y", "z"};
  const auto above = support::closure(names, 3);
  const auto all = support::universe(names, 3);
  std::size_t mismatches = 0;
  for (const Context& a : all) {
    const auto& up = above.at(support::key(a));
    for (const Context& b : all) mismatches += ctx_le(a, b) != (up.count(support::key(b)) == 1);
  }
  std::printf("    %zu contexts, %zu pairs compared with the closure\n", all.size(), all.size() * all.size());
  check(mismatches == 0, std::to_string(mismatches) + " pairs disagree with the closure");
}

void criterion4(Check& check) {
  using namespace support;
  const DBTerm a = translate_term(C("{x}"), T("\\x. W x * x"));
  check(a == lam(at(nm("x"), up())), "{x} |- \\x. W x * x gave " + print_db(a));
  const DBTerm b = translate_term(C("{}"), T("\\y. {y x} * x"));
  check(b == lam(at(one(), ids())), "{} |- \\y. {y x} * x gave " + print_db(b));
  const DBTerm c = translate_term(C("{x}"), T("\\x. W x * x"), Flavor::Upsilon2);
  check(c == blam(at(nm("x"), up())), "bold flavour gave " + print_db(c));
}

void criterion5(Check& check) {
  for (const char* name : {"subject-reduction", "fv-monotone", "fv-least", "translation-simulation", "join-lemmas",
                           "nf-grammar", "upsilon-local-confluence"}) {
    suite(check, name, 1000);
  }
}

void criterion6(Check& check) {
  suite(check, "upsilon-weights", 1000);
  suite(check, "lpo-decrease", 1000);
  suite(check, "sigma-alpha-termination", 10000, 10000);
}

void criterion7(Check& check) {
  const TrialReport r = suite(check, "confluence", 500);
  check(r.inconclusive * 20 < r.trials, "inconclusive rate " + std::to_string(r.inconclusive) + "/500");
}

void criterion8(Check& check) {
  const TrialReport r = suite(check, "oracle-equivalence", 200);
  check(r.inconclusive == 0, std::to_string(r.inconclusive) + " inconclusive");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Check&)> run;
    double budget_s;  // 0 means no time bound
  };
  const std::vector<Criterion> criteria{
      {1, "golden reductions", criterion1, 1.0},
      {2, "free-variable goldens", criterion2, 0},
      {3, "context order and supremum", criterion3, 10.0},
      {4, "translation goldens", criterion4, 0},
      {5, "property suites", criterion5, 120.0},
      {6, "termination certificates", criterion6, 0},
      {7, "confluence harness", criterion7, 0},
      {8, "oracle equivalence", criterion8, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) {
      check(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    }
    const bool ok = check.problems.empty();
    all = all && ok;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title, secs);
    for (const auto& p : check.problems) std::printf("    - %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
