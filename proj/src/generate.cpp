#include "lalpha/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace lalpha {

namespace {

constexpr std::array<const char*, 8> kPool = {"x", "y", "z", "w", "v", "u", "t", "s"};

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Weighted choice among options with nonzero weight; -1 when none is available.
int pick(Rng& rng, const std::vector<std::pair<int, unsigned>>& options) {
  unsigned total = 0;
  for (const auto& o : options) total += o.second;
  if (total == 0) return -1;
  unsigned r = std::uniform_int_distribution<unsigned>(0, total - 1)(rng);
  for (const auto& o : options) {
    if (r < o.second) return o.first;
    r -= o.second;
  }
  return -1;
}

// Budget for one attempt: mostly near the bound, sometimes anywhere below it.
std::size_t target_size(Rng& rng, std::size_t max) {
  if (max <= 2 || coin(rng, 0.2)) return 1 + below(rng, max);
  return max / 2 + below(rng, max - max / 2) + 1;
}

std::vector<Var> members(const Context& ctx) {
  std::vector<Var> out(ctx.global.begin(), ctx.global.end());
  for (const Var& v : ctx.local) {
    if (!ctx.global.contains(v) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

class Untyped {
 public:
  Untyped(const GenConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  Term term(const Context& ctx, std::size_t b) {
    enum { kVar, kApp, kLam, kComp };
    const auto vars = members(ctx);
    const bool local = !ctx.local.empty();
    std::vector<std::pair<int, unsigned>> opts;
    if (!vars.empty()) opts.push_back({kVar, b == 1 ? 1u : b < 4 ? cfg_.w_var : 1u});
    if (b >= 3) opts.push_back({kApp, cfg_.w_app});
    if (b >= 2) opts.push_back({kLam, vars.empty() ? 100u : cfg_.w_lam});
    if (b >= 4 || (b == 3 && local)) opts.push_back({kComp, cfg_.w_comp});
    switch (pick(rng_, opts)) {
      case kVar:
        return Term::var(vars[below(rng_, vars.size())]);
      case kApp: {
        const std::size_t l = 1 + below(rng_, b - 2);
        Term left = term(ctx, l);
        return Term::app(left, term(ctx, b - 1 - left.size()));
      }
      case kComp: {
        const std::size_t sb = (local ? 1 : 2) + below(rng_, b - (local ? 2 : 3));
        auto [s, out] = subst(ctx, sb);
        const std::size_t used = 1 + s.size();
        return Term::comp(s, term(out, used < b ? b - used : 1));
      }
      default: {
        Var x = name();
        return Term::lam(x, term(ctx.pushed(x), b > 1 ? b - 1 : 1));
      }
    }
  }

  std::pair<Subst, Context> subst(const Context& ctx, std::size_t b) {
    enum { kSlash, kWeak, kRename, kLift };
    std::vector<std::pair<int, unsigned>> opts;
    const bool local = !ctx.local.empty();
    if (b >= 2) opts.push_back({kSlash, cfg_.w_slash});
    if (local) {
      opts.push_back({kWeak, cfg_.w_weak});
      opts.push_back({kRename, cfg_.w_rename});
      const bool inner_local = ctx.local.size() >= 2;
      if (b >= 3 || (b == 2 && inner_local)) opts.push_back({kLift, cfg_.w_lift});
    }
    switch (pick(rng_, opts)) {
      case kWeak:
        return {Subst::weak(ctx.local.back()), ctx.popped()};
      case kRename: {
        Var x = name();
        return {Subst::rename(ctx.local.back(), x), ctx.popped().pushed(x)};
      }
      case kLift: {
        const Var& x = ctx.local.back();
        auto [inner, out] = subst(ctx.popped(), b - 1);
        return {Subst::lift(inner, x), out.pushed(x)};
      }
      default: {
        Var x = name();
        Term t = term(ctx, b > 1 ? b - 1 : 1);
        return {Subst::slash(t, x), ctx.pushed(x)};
      }
    }
  }

 private:
  Var name() { return kPool[below(rng_, std::min(cfg_.pool_size, kPool.size()))]; }

  const GenConfig& cfg_;
  Rng& rng_;
};

// Simple types: base o when both halves are null.
struct Type;
using TypeP = std::shared_ptr<const Type>;
struct Type {
  TypeP from, to;
};

bool same_type(const TypeP& a, const TypeP& b) {
  if (!a->from || !b->from) return !a->from && !b->from;
  return same_type(a->from, b->from) && same_type(a->to, b->to);
}

TypeP base() {
  static const TypeP o = std::make_shared<const Type>();
  return o;
}

TypeP arrow(TypeP a, TypeP b) { return std::make_shared<const Type>(Type{std::move(a), std::move(b)}); }

struct TypedCtx {
  std::map<Var, TypeP> global;
  std::vector<std::pair<Var, TypeP>> local;

  TypedCtx pushed(const Var& x, TypeP t) const {
    TypedCtx c = *this;
    c.local.emplace_back(x, std::move(t));
    return c;
  }
  TypedCtx popped() const {
    TypedCtx c = *this;
    c.local.pop_back();
    return c;
  }
  // Names in scope with the type of their rightmost binding.
  std::vector<std::pair<Var, TypeP>> visible() const {
    std::map<Var, TypeP> seen = global;
    for (const auto& [x, t] : local) seen[x] = t;
    return {seen.begin(), seen.end()};
  }
};

class Typed {
 public:
  Typed(const TypedConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  TypeP small_type() {
    if (coin(rng_, 0.65)) return base();
    return arrow(base(), base());
  }

  TypeP goal_type() {
    switch (below(rng_, 4)) {
      case 0: return base();
      case 1: return arrow(base(), base());
      case 2: return arrow(base(), arrow(base(), base()));
      default: return arrow(arrow(base(), base()), arrow(base(), base()));
    }
  }

  Term term(const TypedCtx& ctx, const TypeP& t, std::size_t b) {
    enum { kVar, kApp, kLam, kComp };
    std::vector<Var> vars;
    for (const auto& [x, ty] : ctx.visible()) {
      if (same_type(ty, t)) vars.push_back(x);
    }
    const bool local = !ctx.local.empty();
    std::vector<std::pair<int, unsigned>> opts;
    if (!vars.empty()) opts.push_back({kVar, b == 1 ? 1u : b < 4 ? 3u : 1u});
    if (b >= 3) opts.push_back({kApp, 3});
    if (t->from && b >= 2) opts.push_back({kLam, vars.empty() && b < 3 ? 100u : 3u});
    if (cfg_.substitutions && (b >= 4 || (b == 3 && local))) opts.push_back({kComp, 3});
    int choice = pick(rng_, opts);
    if (choice < 0) choice = t->from ? kLam : kVar;
    switch (choice) {
      case kVar:
        if (vars.empty()) return Term::var("c");
        return Term::var(vars[below(rng_, vars.size())]);
      case kApp: {
        TypeP u = small_type();
        const std::size_t l = 1 + below(rng_, b - 2);
        Term f = term(ctx, arrow(u, t), l);
        return Term::app(f, term(ctx, u, b > 1 + f.size() ? b - 1 - f.size() : 1));
      }
      case kComp: {
        const std::size_t sb = (local ? 1 : 2) + below(rng_, b - (local ? 2 : 3));
        auto [s, out] = subst(ctx, sb);
        const std::size_t used = 1 + s.size();
        return Term::comp(s, term(out, t, used < b ? b - used : 1));
      }
      default: {
        Var x = binder();
        return Term::lam(x, term(ctx.pushed(x, t->from), t->to, b > 1 ? b - 1 : 1));
      }
    }
  }

  std::pair<Subst, TypedCtx> subst(const TypedCtx& ctx, std::size_t b) {
    enum { kSlash, kWeak, kRename, kLift };
    std::vector<std::pair<int, unsigned>> opts;
    const bool local = !ctx.local.empty();
    if (b >= 2) opts.push_back({kSlash, 3});
    if (local) {
      opts.push_back({kWeak, 3});
      opts.push_back({kRename, 2});
      if (b >= 3 || (b == 2 && ctx.local.size() >= 2)) opts.push_back({kLift, 3});
    }
    switch (pick(rng_, opts)) {
      case kWeak:
        return {Subst::weak(ctx.local.back().first), ctx.popped()};
      case kRename: {
        Var x = binder();
        return {Subst::rename(ctx.local.back().first, x), ctx.popped().pushed(x, ctx.local.back().second)};
      }
      case kLift: {
        const auto [x, ty] = ctx.local.back();
        auto [inner, out] = subst(ctx.popped(), b - 1);
        return {Subst::lift(inner, x), out.pushed(x, ty)};
      }
      default: {
        Var x = binder();
        TypeP u = small_type();
        Term t = term(ctx, u, b > 1 ? b - 1 : 1);
        return {Subst::slash(t, x), ctx.pushed(x, u)};
      }
    }
  }

  Var binder() { return kPool[below(rng_, 4)]; }

 private:
  const TypedConfig& cfg_;
  Rng& rng_;
};

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x1a1fau};
  return Rng(seq);
}

Context gen_context(const GenConfig& cfg, Rng& rng) {
  const std::size_t pool = std::min(cfg.pool_size, kPool.size());
  Context ctx;
  const std::size_t ng = below(rng, cfg.max_global + 1);
  for (std::size_t i = 0; i < ng; ++i) ctx.global.insert(kPool[below(rng, pool)]);
  if (!cfg.set_context) {
    const std::size_t nl = below(rng, cfg.max_local + 1);
    for (std::size_t i = 0; i < nl; ++i) ctx.local.push_back(kPool[below(rng, pool)]);
  }
  if (ctx.global.empty() && ctx.local.empty()) ctx.global.insert(kPool[below(rng, pool)]);
  return ctx;
}

Generated gen_wellformed(const GenConfig& cfg, Rng& rng) {
  Untyped g(cfg, rng);
  while (true) {
    Context ctx = gen_context(cfg, rng);
    Term t = g.term(ctx, target_size(rng, cfg.max_size));
    if (t.size() <= cfg.max_size) return {std::move(ctx), std::move(t)};
  }
}

Generated gen_wellformed(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_wellformed(cfg, rng);
}

Generated gen_typed(const TypedConfig& cfg, Rng& rng) {
  Typed g(cfg, rng);
  while (true) {
    TypedCtx ctx;
    ctx.global = {{"c", base()}, {"f", arrow(base(), base())}, {"g", arrow(base(), arrow(base(), base()))}};
    const std::size_t nl = below(rng, cfg.max_local + 1);
    for (std::size_t i = 0; i < nl; ++i) ctx.local.emplace_back(g.binder(), g.small_type());
    Term t = g.term(ctx, g.goal_type(), target_size(rng, cfg.max_size));
    if (t.size() > cfg.max_size) continue;
    Context plain;
    for (const auto& [x, ty] : ctx.global) plain.global.insert(x);
    for (const auto& [x, ty] : ctx.local) plain.local.push_back(x);
    return {std::move(plain), std::move(t)};
  }
}

DBTerm gen_db_term(std::size_t n, std::size_t b, Rng& rng, bool bold) {
  enum { kName, kOne, kShifted, kApp, kLam, kBold, kComp };
  std::vector<std::pair<int, unsigned>> opts;
  if (n == 0) opts.push_back({kName, b == 1 ? 1u : 2u});
  if (n >= 1) opts.push_back({kOne, b == 1 ? 1u : 2u});
  if (n >= 1 && b >= 3) opts.push_back({kShifted, 2});
  if (b >= 3) opts.push_back({kApp, 3});
  if (b >= 2) opts.push_back({kLam, 3});
  if (bold && b >= 2) opts.push_back({kBold, 2});
  if (b >= 4) opts.push_back({kComp, 4});
  switch (pick(rng, opts)) {
    case kOne:
      return DBTerm::one();
    case kShifted:
      return DBTerm::comp(DBSub::shift(), gen_db_term(n - 1, b - 2, rng, bold));
    case kApp: {
      DBTerm l = gen_db_term(n, 1 + below(rng, b - 2), rng, bold);
      return DBTerm::app(l, gen_db_term(n, b > 1 + l.size() ? b - 1 - l.size() : 1, rng, bold));
    }
    case kLam:
      return DBTerm::lam(gen_db_term(n + 1, b - 1, rng, bold));
    case kBold:
      return DBTerm::bold_lam(gen_db_term(n + 1, b - 1, rng, bold));
    case kComp: {
      auto [s, m] = gen_db_sub(n, 2 + below(rng, b - 3), rng, bold);
      const std::size_t used = 1 + s.size();
      return DBTerm::comp(s, gen_db_term(m, used < b ? b - used : 1, rng, bold));
    }
    default:
      return DBTerm::name(kPool[below(rng, 3)]);
  }
}

std::pair<DBSub, std::size_t> gen_db_sub(std::size_t n, std::size_t b, Rng& rng, bool bold) {
  enum { kSlash, kShift, kId, kLift };
  std::vector<std::pair<int, unsigned>> opts;
  if (b >= 2) opts.push_back({kSlash, 3});
  if (n >= 1) {
    opts.push_back({kShift, 2});
    opts.push_back({kId, 2});
    if (b >= 3 || (b == 2 && n >= 2)) opts.push_back({kLift, 3});
  }
  switch (pick(rng, opts)) {
    case kShift:
      return {DBSub::shift(), n - 1};
    case kId:
      return {DBSub::id(), n};
    case kLift: {
      auto [inner, m] = gen_db_sub(n - 1, b - 1, rng, bold);
      return {DBSub::lift(inner), m + 1};
    }
    default:
      return {DBSub::slash(gen_db_term(n, b > 1 ? b - 1 : 1, rng, bold)), n + 1};
  }
}

}  // namespace lalpha
