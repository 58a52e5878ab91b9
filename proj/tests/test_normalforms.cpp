#include "doctest.h"

#include "lalpha/generate.hpp"
#include "lalpha/normalforms.hpp"
#include "lalpha/oracle.hpp"
#include "lalpha/rewrite.hpp"
#include "lalpha/typing.hpp"
#include "support.hpp"

using namespace lalpha;
using support::T;

TEST_SUITE("normalforms") {
  TEST_CASE("blocks") {
    CHECK(as_block(T("W z * z")) == Block{{"z"}, "z"});
    CHECK(as_block(T("W x * W z * z")) == Block{{"x", "z"}, "z"});
    CHECK_FALSE(as_block(T("W x * z")).has_value());
    CHECK_FALSE(as_block(T("z")).has_value());
    CHECK_FALSE(as_block(T("W x * W z * y")).has_value());
  }

  TEST_CASE("grammar examples agree with the redex scan") {
    for (const char* s : {"\\y. W y * y", "x (W y * y)", "\\x. x (\\y. y)"}) {
      CAPTURE(s);
      CHECK(is_sigma_nf(T(s)));
      CHECK(find_redexes(T(s), RuleSet::sigma()).empty());
    }
    for (const char* s : {"[y/x] * x", "W x * z", "W x * \\y. y", "W x * y z", "W x * W y * z",
                          // W x * z is still a W redex inside the block-like chain
                          "\\x.\\y. W y * W x * z"}) {
      CAPTURE(s);
      CHECK_FALSE(is_sigma_nf(T(s)));
      CHECK_FALSE(find_redexes(T(s), RuleSet::sigma()).empty());
    }
  }

  TEST_CASE("grammar agrees with the redex scan on generated terms") {
    GenConfig cfg;
    std::size_t normal = 0;
    for (std::uint64_t i = 0; i < 3000; ++i) {
      Rng rng = trial_rng(61, i);
      const Term a = gen_wellformed(cfg, rng).term;
      const Normalized n = normalize(a, RuleSet::sigma(), Strategy::lo(), 10000);
      REQUIRE_FALSE(n.exhausted);
      for (const Term& t : {a, n.term}) {
        const bool g = is_sigma_nf(t);
        REQUIRE_MESSAGE(g == find_redexes(t, RuleSet::sigma()).empty(), print_term(t));
        normal += g;
      }
    }
    CHECK(normal >= 3000);
  }

  TEST_CASE("conversion to pure terms") {
    CHECK(to_pure(T("\\y. z")).term() == T("\\y. z"));
    CHECK(to_pure(T("\\y.\\z. z")).term() == T("\\y.\\z. z"));
    CHECK(to_pure(T("x y")).term() == T("x y"));
    try {
      to_pure(T("\\y. (W z * z) y"));
      FAIL("expected a block");
    } catch (const ContainsBlock& e) {
      CHECK(e.offending() == T("W z * z"));
      CHECK(e.path() == Path{Step::LamBody, Step::AppLeft});
    }
    CHECK(PureTerm::from(T("x y")).has_value());
    CHECK_FALSE(PureTerm::from(T("W x * y")).has_value());
  }

  TEST_CASE("good normal forms are pure") {
    GenConfig cfg;
    cfg.set_context = true;
    for (std::uint64_t i = 0; i < 3000; ++i) {
      Rng rng = trial_rng(62, i);
      const Term a = gen_wellformed(cfg, rng).term;
      REQUIRE(is_good(a));
      const Normalized n = normalize(a, RuleSet::sigma_alpha(), Strategy::lo(), 10000);
      REQUIRE_FALSE(n.exhausted);
      REQUIRE_NOTHROW(to_pure(n.term));
      REQUIRE(is_good(n.term));
    }
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("classical normal forms") {
    CHECK(classical_normalize(T("(\\x.x) y"), 10) == T("y"));
    const auto k = classical_normalize(T("(\\x.\\y.x) y"), 10);
    REQUIRE(k.has_value());
    CHECK(classical_alpha_eq(*k, T("\\z. y")));
    CHECK_FALSE(classical_alpha_eq(*k, T("\\y. y")));
    CHECK(classical_alpha_eq(*classical_normalize(T("(\\x.\\y\\z. x z (y z)) (\\x.\\y.x)"), 100), T("\\y.\\z. z")));
    CHECK_FALSE(classical_normalize(T("(\\x. x x) (\\x. x x)"), 100).has_value());
  }

  TEST_CASE("substitution avoids capture") {
    const Term r = classical_subst(T("\\y. x y"), "x", T("y"));
    CHECK(classical_alpha_eq(r, T("\\z. y z")));
    CHECK(classical_subst(T("\\x. x"), "x", T("y")) == T("\\x. x"));
    CHECK(classical_fv(T("\\x. x y (\\z. z w)")) == std::set<Var>{"w", "y"});
  }

  TEST_CASE("alpha congruence") {
    CHECK(classical_alpha_eq(T("\\x. \\y. x y"), T("\\a. \\b. a b")));
    CHECK_FALSE(classical_alpha_eq(T("\\x. \\y. x y"), T("\\a. \\b. b a")));
    CHECK_FALSE(classical_alpha_eq(T("\\x. y"), T("\\x. z")));
    CHECK(classical_alpha_eq(T("\\x. \\x. x"), T("\\y. \\z. z")));
    CHECK_FALSE(classical_alpha_eq(T("\\x. \\x. x"), T("\\y. \\z. y")));
  }

  TEST_CASE("explicit substitutions reach the classical normal form") {
    TypedConfig tc;
    tc.substitutions = false;
    tc.max_local = 0;
    std::size_t with_beta = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
      Rng rng = trial_rng(63, i);
      const Term a = gen_typed(tc, rng).term;
      REQUIRE(is_pure(a));
      REQUIRE(is_good(a));
      const Normalized n = normalize(a, RuleSet::full(), Strategy::lo(), 10000);
      const auto c = classical_normalize(a, 10000);
      REQUIRE_FALSE(n.exhausted);
      REQUIRE(c.has_value());
      REQUIRE_MESSAGE(classical_alpha_eq(to_pure(n.term).term(), *c), print_term(a));
      for (const auto& s : n.trace.steps) {
        if (s.rule == RuleId::Beta) {
          ++with_beta;
          break;
        }
      }
    }
    // the comparison is not vacuous
    CHECK(with_beta > 100);
  }
}
