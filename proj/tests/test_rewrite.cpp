#include "doctest.h"

#include <tuple>

#include "json.hpp"

#include "lalpha/freevars.hpp"
#include "lalpha/generate.hpp"
#include "lalpha/rewrite.hpp"
#include "lalpha/typing.hpp"
#include "support.hpp"

using namespace lalpha;
using support::C;
using support::T;

namespace {

constexpr Step L = Step::AppLeft, R = Step::AppRight, B = Step::LamBody, CB = Step::CompBody;

using Link = std::tuple<RuleId, Path, const char*>;

// Applies each rule at its path in turn and compares with the expected term.
Term follow(Term a, const std::vector<Link>& chain) {
  for (const auto& [rule, path, expected] : chain) {
    a = apply_rule(a, path, rule).term;
    REQUIRE_MESSAGE(a == T(expected), rule_id_name(rule) << ": got " << print_term(a));
  }
  return a;
}

std::vector<RuleId> rules_of(const Trace& t) {
  std::vector<RuleId> out;
  for (const auto& s : t.steps) out.push_back(s.rule);
  return out;
}

const char* kK = "\\x.\\y.x";

}  // namespace

TEST_SUITE("rewrite") {
  TEST_CASE("rule presets") {
    for (int i = 0; i < kRuleCount; ++i) {
      const auto r = static_cast<RuleId>(i);
      CHECK(RuleSet::full().contains(r));
      CHECK(RuleSet::sigma().contains(r) == (r != RuleId::Beta && r != RuleId::Alpha));
      CHECK(RuleSet::sigma_alpha().contains(r) == (r != RuleId::Beta));
      CHECK(RuleSet::sigma_beta().contains(r) == (r != RuleId::Alpha));
      CHECK(parse_rule_id(rule_id_name(r)) == r);
    }
    CHECK(RuleSet::named("sigma-alpha") == RuleSet::sigma_alpha());
    CHECK_FALSE(RuleSet::named("beta").has_value());
    CHECK(std::string(rule_id_name(RuleId::LiftShiftP)) == "LiftShift'");
  }

  TEST_CASE("one instance of every rule") {
    const std::vector<std::tuple<RuleId, const char*, const char*>> cases = {
        {RuleId::Beta, "(\\x. x) y", "[y/x] * x"},
        {RuleId::App, "W z * x y", "(W z * x) (W z * y)"},
        {RuleId::Lambda, "W z * \\x. x", "\\x. W z^x * x"},
        {RuleId::Var, "[y/x] * x", "y"},
        {RuleId::Shift, "[y/x] * W x * z", "z"},
        {RuleId::ShiftP, "[y/x] * z", "z"},
        {RuleId::IdVar, "{y x} * x", "y"},
        {RuleId::IdShift, "{y x} * W x * z", "W y * z"},
        {RuleId::IdShiftP, "{y x} * z", "W y * z"},
        {RuleId::LiftVar, "W z^x * x", "x"},
        {RuleId::LiftShift, "W z^x * W x * y", "W x * W z * y"},
        {RuleId::LiftShiftP, "W z^x * y", "W x * W z * y"},
        {RuleId::W, "W x * z", "z"},
        {RuleId::Alpha, "\\y. W y * y", "\\z. {z y} * W y * y"},
    };
    for (const auto& [rule, lhs, rhs] : cases) {
      CAPTURE(rule_id_name(rule));
      const Term a = T(lhs);
      if (rule != RuleId::Alpha) CHECK(match_root(a) == rule);
      const auto rs = find_redexes(a, RuleSet::full());
      CHECK(std::find(rs.begin(), rs.end(), Redex{{}, rule}) != rs.end());
      CHECK(apply_rule(a, {}, rule).term == T(rhs));
    }
  }

  TEST_CASE("side conditions keep the primed rules apart") {
    CHECK(match_root(T("[y/x] * x")) == RuleId::Var);
    CHECK(match_root(T("[y/x] * z")) == RuleId::ShiftP);
    CHECK(match_root(T("W x * x")) == std::nullopt);
    CHECK(match_root(T("{y x} * x")) == RuleId::IdVar);
    CHECK(match_root(T("W x^x * x")) == RuleId::LiftVar);
    CHECK(match_root(T("W z^x * W x * y")) == RuleId::LiftShift);
    CHECK(match_root(T("[a/x] * W x * x")) == RuleId::Shift);
    CHECK_THROWS_AS(apply_rule(T("W x * x"), {}, RuleId::W), InvalidRedex);
    CHECK_THROWS_AS(apply_rule(T("x y"), {}, RuleId::Beta), InvalidRedex);
    CHECK_THROWS_AS(apply_rule(T("\\x. x"), {}, RuleId::Alpha), InvalidRedex);
  }

  TEST_CASE("redex lists") {
    CHECK(find_redexes(T("(\\x.x) y"), RuleSet::full()) == std::vector<Redex>{{{}, RuleId::Beta}});
    CHECK(find_redexes(T("\\y. W y * y"), RuleSet::sigma_alpha()) == std::vector<Redex>{{{}, RuleId::Alpha}});
    CHECK(find_redexes(T("[y/x]^y * x"), RuleSet::sigma()) == std::vector<Redex>{{{}, RuleId::LiftShiftP}});
    CHECK(find_redexes(T("(\\x. x) ((\\y. y) z)"), RuleSet::full()) ==
          std::vector<Redex>{{{}, RuleId::Beta}, {{R}, RuleId::Beta}});
    // no renaming when the binder is not free
    CHECK(find_redexes(T("\\x. x"), RuleSet::full()).empty());
    CHECK(find_redexes(T("\\x. y"), RuleSet::full()).empty());
    // nor anywhere in an ill-formed term
    const Term bad = T("(\\y. W y * y) ((W x * a) (W y * b))");
    CHECK_FALSE(is_well_formed(bad));
    for (const Redex& r : find_redexes(bad, RuleSet::full())) CHECK(r.rule != RuleId::Alpha);
  }

  TEST_CASE("apply_rule examples") {
    CHECK(apply_rule(T("(\\x.\\y.x) y"), {}, RuleId::Beta).term == T("[y/x] * \\y.x"));
    CHECK(apply_rule(T("{z y} * W y * y"), {}, RuleId::IdShift).term == T("W z * y"));
    const Rewrite a = apply_rule(T("\\y. W y * y"), {}, RuleId::Alpha);
    CHECK(a.term == T("\\z. {z y} * W y * y"));
    CHECK(a.fresh == Var("z"));
  }

  TEST_CASE("fresh names") {
    CHECK(fresh_var(C("{y}"), "y") == "z");
    CHECK(fresh_var(C("{z,y}"), "y") == "x");
    CHECK(fresh_var(C("{}"), "z") == "y");
    CHECK(fresh_var(C("{z,y,x,w,v,u,t}"), "s") == "a1");
    CHECK(fresh_var(C("{z,y,x,w,v,u,t,s,a1}; a2"), "q") == "a3");
  }

  TEST_CASE("strategies") {
    const Term a = T("(\\x. x) ((\\y. y) z)");
    CHECK(step(a, RuleSet::full(), Strategy::lo())->at == Path{});
    CHECK(step(a, RuleSet::full(), Strategy::ri())->at == Path{R});
    CHECK(step(a, RuleSet::full(), Strategy::indexed(1))->at == Path{R});
    CHECK_FALSE(step(a, RuleSet::full(), Strategy::indexed(2)).has_value());
    CHECK(Strategy::parse("index:3")->index == 3);
    CHECK(Strategy::parse("ri")->kind == Strategy::Kind::RightmostInnermost);
    CHECK_FALSE(Strategy::parse("index:").has_value());
    CHECK_FALSE(Strategy::parse("outermost").has_value());
    // renaming waits until nothing else is left
    const Term b = T("\\y. (W y * y) ((\\x. x) y)");
    CHECK(step(b, RuleSet::full(), Strategy::lo())->rule == RuleId::Beta);
    CHECK(step(b, RuleSet::full(), Strategy::indexed(0))->rule == RuleId::Alpha);
  }

  TEST_CASE("single steps") {
    CHECK(step(T("(\\x.x) y"), RuleSet::full(), Strategy::lo())->result == T("[y/x] * x"));
    CHECK_FALSE(step(T("\\y. z"), RuleSet::sigma_alpha(), Strategy::lo()).has_value());
  }

  TEST_CASE("identity applied: two steps") {
    const Normalized n = normalize(T("(\\x.x) y"), RuleSet::full(), Strategy::lo(), 100);
    CHECK(n.term == T("y"));
    CHECK(rules_of(n.trace) == std::vector<RuleId>{RuleId::Beta, RuleId::Var});
  }

  TEST_CASE("constant applied to a fresh name: five steps") {
    const Normalized n = normalize(T("(\\x.\\y.x) z"), RuleSet::full(), Strategy::lo(), 100);
    CHECK(n.term == T("\\y.z"));
    CHECK(rules_of(n.trace) ==
          std::vector<RuleId>{RuleId::Beta, RuleId::Lambda, RuleId::LiftShiftP, RuleId::Var, RuleId::W});
  }

  TEST_CASE("constant applied to its bound name: one renaming avoids capture") {
    const Term start = T("(\\x.\\y.x) y");
    follow(start, {{RuleId::Beta, {}, "[y/x] * \\y.x"},
                   {RuleId::Lambda, {}, "\\y. [y/x]^y * x"},
                   {RuleId::LiftShiftP, {B}, "\\y. W y * [y/x] * x"},
                   {RuleId::Var, {B, CB}, "\\y. W y * y"},
                   {RuleId::Alpha, {}, "\\z. {z y} * W y * y"},
                   {RuleId::IdShift, {B}, "\\z. W z * y"},
                   {RuleId::W, {B}, "\\z. y"}});
    const Normalized n = normalize(start, RuleSet::full(), Strategy::lo(), 100);
    CHECK(n.term == T("\\z. y"));
    CHECK(rules_of(n.trace) == std::vector<RuleId>{RuleId::Beta, RuleId::Lambda, RuleId::LiftShiftP, RuleId::Var,
                                                   RuleId::Alpha, RuleId::IdShift, RuleId::W});
    CHECK(n.trace.steps[4].fresh == Var("z"));
  }

  TEST_CASE("the chain under two lifts, first argument") {
    const std::string s = std::string("[") + kK + "/x]";
    const Term mid = follow(T(s + "^y^z * x z"), {
                                                    {RuleId::App, {}, "([\\x.\\y.x/x]^y^z * x) ([\\x.\\y.x/x]^y^z * z)"},
                                                    {RuleId::LiftVar, {R}, "([\\x.\\y.x/x]^y^z * x) z"},
                                                    {RuleId::LiftShiftP, {L}, "(W z * [\\x.\\y.x/x]^y * x) z"},
                                                    {RuleId::LiftShiftP, {L, CB}, "(W z * W y * [\\x.\\y.x/x] * x) z"},
                                                    {RuleId::Var, {L, CB, CB}, "(W z * W y * \\x.\\y.x) z"},
                                                });
    // the weakenings vanish because the abstraction is closed
    const Normalized closed = normalize(*term_at(mid, {L}), RuleSet::sigma(), Strategy::lo(), 100);
    CHECK(closed.term == T(kK));
    follow(replace_at(mid, {L}, closed.term), {
                                                  {RuleId::Beta, {}, "[z/x] * \\y.x"},
                                                  {RuleId::Lambda, {}, "\\y. [z/x]^y * x"},
                                                  {RuleId::LiftShiftP, {B}, "\\y. W y * [z/x] * x"},
                                                  {RuleId::Var, {B, CB}, "\\y. W y * z"},
                                                  {RuleId::W, {B}, "\\y. z"},
                                              });
    CHECK(normalize(T(s + "^y^z * x z"), RuleSet::full(), Strategy::lo(), 1000).term == T("\\y. z"));
  }

  TEST_CASE("the chain under two lifts, second argument") {
    const std::string s = std::string("[") + kK + "/x]";
    follow(T(s + "^y^z * y z"), {
                                    {RuleId::App, {}, "([\\x.\\y.x/x]^y^z * y) ([\\x.\\y.x/x]^y^z * z)"},
                                    {RuleId::LiftVar, {R}, "([\\x.\\y.x/x]^y^z * y) z"},
                                    {RuleId::LiftShiftP, {L}, "(W z * [\\x.\\y.x/x]^y * y) z"},
                                    {RuleId::LiftVar, {L, CB}, "(W z * y) z"},
                                    {RuleId::W, {L}, "y z"},
                                });
    CHECK(normalize(T(s + "^y^z * y z"), RuleSet::full(), Strategy::lo(), 1000).term == T("y z"));
  }

  TEST_CASE("S K") {
    const Term sk = T("(\\x.\\y\\z. x z (y z)) (\\x.\\y.x)");
    const Term split = follow(sk, {
                                      {RuleId::Beta, {}, "[\\x.\\y.x/x] * \\y.\\z. x z (y z)"},
                                      {RuleId::Lambda, {}, "\\y. [\\x.\\y.x/x]^y * \\z. x z (y z)"},
                                      {RuleId::Lambda, {B}, "\\y.\\z. [\\x.\\y.x/x]^y^z * x z (y z)"},
                                      {RuleId::App, {B, B}, "\\y.\\z. ([\\x.\\y.x/x]^y^z * x z) ([\\x.\\y.x/x]^y^z * y z)"},
                                  });
    auto sub = [&](const Term& t, const Path& p) {
      return replace_at(t, p, normalize(*term_at(t, p), RuleSet::full(), Strategy::lo(), 1000).term);
    };
    const Term after = sub(sub(split, {B, B, L}), {B, B, R});
    CHECK(after == T("\\y.\\z. (\\y. z) (y z)"));
    follow(after, {{RuleId::Beta, {B, B}, "\\y.\\z. [y z/y] * z"}, {RuleId::ShiftP, {B, B}, "\\y.\\z. z"}});
    const Normalized n = normalize(sk, RuleSet::full(), Strategy::lo(), 1000);
    CHECK(n.term == T("\\y.\\z. z"));
    CHECK_FALSE(n.exhausted);
  }

  TEST_CASE("fuel") {
    const Normalized n = normalize(T("(\\x. x x) (\\x. x x)"), RuleSet::full(), Strategy::lo(), 50);
    CHECK(n.exhausted);
    CHECK(n.trace.steps.size() == 50);
    CHECK_FALSE(normalize(T("(\\x.x) y"), RuleSet::full(), Strategy::lo(), 2).exhausted);
  }

  TEST_CASE("trace formats") {
    const Normalized n = normalize(T("(\\x.x) y"), RuleSet::full(), Strategy::lo(), 10);
    CHECK(trace_to_text(n.trace) == "# (\\x. x) y\nBeta\t[]\tnull\t[y/x] * x\nVar\t[]\tnull\ty\n");
    const Normalized m = normalize(T("(\\x.\\y.x) y"), RuleSet::full(), Strategy::lo(), 10);
    const auto j = nlohmann::json::parse(trace_to_json(m.trace));
    CHECK(j["initial"] == "(\\x. \\y. x) y");
    REQUIRE(j["steps"].size() == 7);
    for (const auto& s : j["steps"]) {
      CHECK(s.size() == 4);
      CHECK(s.contains("ruleName"));
      CHECK(s.contains("pathAsChildIndices"));
      CHECK(s.contains("freshVariableOrNull"));
      CHECK(s.contains("printedTerm"));
    }
    CHECK(j["steps"][4]["ruleName"] == "Alpha");
    CHECK(j["steps"][4]["freshVariableOrNull"] == "z");
    CHECK(j["steps"][3]["pathAsChildIndices"] == nlohmann::json::array({0, 1}));
    CHECK(j["steps"][0]["freshVariableOrNull"].is_null());
  }

  TEST_CASE("generated terms: disjoint matches and replayable traces") {
    GenConfig cfg;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      Rng rng = trial_rng(41, i);
      const Generated g = gen_wellformed(cfg, rng);
      // match_root throws on an overlap; find_redexes calls it everywhere
      const auto rs = find_redexes(g.term, RuleSet::full());
      for (const Redex& r : rs) REQUIRE_NOTHROW(apply_rule(g.term, r.path, r.rule));
      const Normalized n = normalize(g.term, RuleSet::sigma_alpha(), Strategy::ri(), 10000);
      REQUIRE_FALSE(n.exhausted);
      Term cur = n.trace.initial;
      for (const auto& s : n.trace.steps) {
        const Rewrite w = apply_rule(cur, s.at, s.rule);
        REQUIRE(w.term == s.result);
        REQUIRE(w.fresh == s.fresh);
        cur = w.term;
      }
      REQUIRE(find_redexes(n.term, RuleSet::sigma_alpha()).empty());
    }
  }
}
