#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace lalpha;
using support::C;

namespace {

const std::vector<Var> kXYZ = {"x", "y", "z"};

Context ctx(std::initializer_list<Var> g, std::initializer_list<Var> l) { return Context(VarSet(g), std::vector<Var>(l)); }

}  // namespace

TEST_SUITE("contexts") {
  TEST_CASE("membership") {
    CHECK(ctx_member("x", ctx({"x", "z"}, {"y"})));
    CHECK(ctx_member("y", ctx({"x", "z"}, {"x", "x", "y"})));
    CHECK_FALSE(ctx_member("w", ctx({"x", "z"}, {"x", "x", "y"})));
  }

  TEST_CASE("order examples") {
    // {z},y < {z,x},y < {z},x,y < {z,x},x,y
    const Context a = ctx({"z"}, {"y"}), b = ctx({"z", "x"}, {"y"}), c = ctx({"z"}, {"x", "y"}),
                  d = ctx({"z", "x"}, {"x", "y"});
    CHECK(ctx_le(a, b));
    CHECK(ctx_le(b, c));
    CHECK(ctx_le(c, d));
    CHECK(ctx_le(a, d));
    CHECK_FALSE(ctx_le(b, a));
    CHECK_FALSE(ctx_le(c, b));
    CHECK_FALSE(ctx_le(d, c));
    CHECK_FALSE(ctx_le(c, a));
  }

  TEST_CASE("order equals the closure of its generating steps") {
    const auto above = support::closure(kXYZ, 3);
    const auto all = support::universe(kXYZ, 3);
    std::size_t related = 0;
    for (const Context& a : all) {
      const auto& up = above.at(support::key(a));
      for (const Context& b : all) {
        const bool le = ctx_le(a, b);
        related += le;
        REQUIRE_MESSAGE(le == (up.count(support::key(b)) == 1), print_context(a) << " vs " << print_context(b));
      }
    }
    CHECK(related > all.size());
  }

  TEST_CASE("order is a partial order") {
    const auto all = support::universe({"x", "y"}, 2);
    for (const Context& a : all) {
      CHECK(ctx_le(a, a));
      for (const Context& b : all) {
        if (ctx_le(a, b) && ctx_le(b, a)) CHECK(a == b);
        if (!ctx_le(a, b)) continue;
        for (const Context& c : all) {
          if (ctx_le(b, c)) REQUIRE(ctx_le(a, c));
        }
      }
    }
  }

  TEST_CASE("order facts") {
    const auto all = support::universe(kXYZ, 2);
    for (const Context& a : all) {
      for (const Context& b : all) {
        for (const Var& x : kXYZ) {
          // Γ,x ≤ Δ,x iff Γ ≤ Δ
          REQUIRE(ctx_le(a.pushed(x), b.pushed(x)) == ctx_le(a, b));
        }
        if (!ctx_le(a, b)) continue;
        // Γ,x ≤ Δ implies Δ ends in x
        if (!a.local.empty()) REQUIRE((!b.local.empty() && b.local.back() == a.local.back()));
        // Γ ≤ Δ,x implies Γ ends in x or is a set
        if (!b.local.empty()) REQUIRE((a.local.empty() || a.local.back() == b.local.back()));
        // Γ ≤ G implies Γ is a set
        if (b.local.empty()) REQUIRE(a.local.empty());
      }
    }
  }

  TEST_CASE("compatibility") {
    CHECK(ctx_compatible(ctx({"x"}, {"z"}), ctx({"y", "z"}, {})));
    CHECK_FALSE(ctx_compatible(ctx({}, {"x"}), ctx({}, {"y"})));
    CHECK(ctx_compatible(ctx({"x"}, {"x", "y"}), ctx({"x"}, {"x", "y"})));
    // compatible iff a common upper bound exists
    const auto small = support::universe(kXYZ, 2);
    const auto big = support::universe(kXYZ, 3);
    for (const Context& a : small) {
      for (const Context& b : small) {
        const bool bound = std::any_of(big.begin(), big.end(), [&](const Context& u) { return ctx_le(a, u) && ctx_le(b, u); });
        REQUIRE(ctx_compatible(a, b) == bound);
      }
    }
  }

  TEST_CASE("supremum examples") {
    CHECK(ctx_sup(ctx({"x"}, {"z"}), ctx({"y", "z"}, {})) == ctx({"x", "y"}, {"z"}));
    CHECK(ctx_sup(ctx({"x", "y"}, {}), ctx({"x", "y"}, {})) == ctx({"x", "y"}, {}));
    CHECK(ctx_sup(ctx({}, {"x", "y"}), ctx({"x"}, {"y"})) == ctx({}, {"x", "y"}));
    CHECK_FALSE(ctx_sup(ctx({}, {"x"}), ctx({}, {"y"})).has_value());
  }

  TEST_CASE("supremum is the least upper bound") {
    const auto small = support::universe(kXYZ, 2);
    const auto big = support::universe(kXYZ, 3);
    for (const Context& a : small) {
      for (const Context& b : small) {
        const auto s = ctx_sup(a, b);
        std::vector<const Context*> bounds;
        for (const Context& u : big) {
          if (ctx_le(a, u) && ctx_le(b, u)) bounds.push_back(&u);
        }
        REQUIRE(s.has_value() == !bounds.empty());
        if (!s) continue;
        REQUIRE(ctx_le(a, *s));
        REQUIRE(ctx_le(b, *s));
        for (const Context* u : bounds) REQUIRE(ctx_le(*s, *u));
      }
    }
  }

  TEST_CASE("removing a binder") {
    CHECK(o_lambda("x", ctx({"x", "y"}, {})) == ctx({"y"}, {}));
    CHECK(o_lambda("x", ctx({"x"}, {"x"})) == ctx({"x"}, {}));
    CHECK_FALSE(o_lambda("x", ctx({}, {"y"})).has_value());
    CHECK(o_lambda("x", ctx({"y"}, {})) == ctx({"y"}, {}));
  }

  TEST_CASE("removing a binder distributes over the supremum") {
    const auto small = support::universe(kXYZ, 2);
    std::size_t cases = 0;
    for (const Context& a : small) {
      for (const Context& b : small) {
        const auto s = ctx_sup(a, b);
        if (!s) continue;
        for (const Var& x : kXYZ) {
          const auto lhs = o_lambda(x, *s);
          if (!lhs) continue;
          const auto oa = o_lambda(x, a), ob = o_lambda(x, b);
          REQUIRE(oa.has_value());
          REQUIRE(ob.has_value());
          REQUIRE(ctx_sup(*oa, *ob) == lhs);
          ++cases;
        }
      }
    }
    CHECK(cases > 1000);
  }

  TEST_CASE("random contexts respect the order laws") {
    std::mt19937_64 rng(11);
    const std::vector<Var> pool = {"x", "y", "z", "w", "v"};
    auto rand_ctx = [&] {
      Context c;
      for (const Var& v : pool) {
        if (rng() % 2) c.global.insert(v);
      }
      const std::size_t n = rng() % 5;
      for (std::size_t i = 0; i < n; ++i) c.local.push_back(pool[rng() % pool.size()]);
      return c;
    };
    for (int i = 0; i < 20000; ++i) {
      const Context a = rand_ctx(), b = rand_ctx();
      CHECK(ctx_le(a, a));
      if (ctx_le(a, b) && ctx_le(b, a)) CHECK(a == b);
      if (const auto s = ctx_sup(a, b)) {
        CHECK(ctx_le(a, *s));
        CHECK(ctx_le(b, *s));
        CHECK(ctx_sup(b, a) == s);
      }
    }
  }

  TEST_CASE("parsed contexts") { CHECK(ctx_le(C("{z}; y"), C("{z,x}; x,y"))); }
}
