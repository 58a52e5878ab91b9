#include "lalpha/typing.hpp"

#include "lalpha/freevars.hpp"
#include "lalpha/syntax.hpp"

namespace lalpha {

const char* rule_name(Rule r) {
  static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"};
  return names[static_cast<int>(r)];
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

namespace {

// With `build` false only derivability and output contexts are computed.
class Checker {
 public:
  explicit Checker(bool build) : build_(build) {}

  std::optional<Derivation> term(const Context& ctx, const Term& a) {
    switch (a.kind()) {
      case TermKind::Var:
        return variable(ctx, a);
      case TermKind::App: {
        path_.push_back(Step::AppLeft);
        auto l = term(ctx, a.left());
        path_.pop_back();
        if (!l) return std::nullopt;
        path_.push_back(Step::AppRight);
        auto r = term(ctx, a.right());
        path_.pop_back();
        if (!r) return std::nullopt;
        return node(Rule::R4, ctx, a, {std::move(*l), std::move(*r)});
      }
      case TermKind::Lam: {
        path_.push_back(Step::LamBody);
        auto b = term(ctx.pushed(a.name()), a.body());
        path_.pop_back();
        if (!b) return std::nullopt;
        return node(Rule::R5, ctx, a, {std::move(*b)});
      }
      case TermKind::Comp: {
        path_.push_back(Step::CompSubst);
        auto s = subst(ctx, a.subst());
        path_.pop_back();
        if (!s) return std::nullopt;
        path_.push_back(Step::CompBody);
        auto b = term(s->second, a.body());
        path_.pop_back();
        if (!b) return std::nullopt;
        return node(Rule::R6, ctx, a, {std::move(s->first), std::move(*b)});
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Derivation, Context>> subst(const Context& ctx, const Subst& s) {
    switch (s.kind()) {
      case SubstKind::Slash: {
        path_.push_back(Step::SlashBody);
        auto b = term(ctx, s.term());
        path_.pop_back();
        if (!b) return std::nullopt;
        Context out = ctx.pushed(s.var());
        return std::pair{subst_node(Rule::R7, ctx, s, out, {std::move(*b)}), std::move(out)};
      }
      case SubstKind::Weak: {
        if (!ends_with(ctx, s.var(), "W " + s.var())) return std::nullopt;
        Context out = ctx.popped();
        return std::pair{subst_node(Rule::R8, ctx, s, out, {}), std::move(out)};
      }
      case SubstKind::Rename: {
        if (!ends_with(ctx, s.new_var(), "{" + s.new_var() + " " + s.var() + "}")) return std::nullopt;
        Context out = ctx.popped().pushed(s.var());
        return std::pair{subst_node(Rule::R9, ctx, s, out, {}), std::move(out)};
      }
      case SubstKind::Lift: {
        if (!ends_with(ctx, s.var(), "lift ^" + s.var())) return std::nullopt;
        path_.push_back(Step::LiftInner);
        auto inner = subst(ctx.popped(), s.inner());
        path_.pop_back();
        if (!inner) return std::nullopt;
        Context out = inner->second.pushed(s.var());
        return std::pair{subst_node(Rule::R10, ctx, s, out, {std::move(inner->first)}), std::move(out)};
      }
    }
    return std::nullopt;
  }

  std::optional<NotDerivable> failure;

 private:
  std::optional<Derivation> variable(const Context& ctx, const Term& a) {
    // R2 when the rightmost local name matches, R3 to strip a different one, R1 on a pure set.
    const Var& x = a.name();
    if (ctx.local.empty()) {
      if (!ctx.global.contains(x)) {
        fail("variable " + x + " is not in the context " + print_context(ctx));
        return std::nullopt;
      }
      return node(Rule::R1, ctx, a, {});
    }
    if (ctx.local.back() == x) return node(Rule::R2, ctx, a, {});
    auto inner = variable(ctx.popped(), a);
    if (!inner) return std::nullopt;
    return node(Rule::R3, ctx, a, {std::move(*inner)});
  }

  bool ends_with(const Context& ctx, const Var& x, const std::string& what) {
    if (!ctx.local.empty() && ctx.local.back() == x) return true;
    fail(what + " needs a context ending in " + x + ", got " + print_context(ctx));
    return false;
  }

  void fail(std::string reason) {
    if (!failure) failure.emplace(path_, std::move(reason));
  }

  Derivation node(Rule r, const Context& ctx, const Term& a, std::vector<Derivation> premises) {
    if (!build_) return Derivation{r, {}, std::nullopt, std::nullopt, {}, {}};
    return Derivation{r, ctx, a, std::nullopt, {}, std::move(premises)};
  }

  Derivation subst_node(Rule r, const Context& ctx, const Subst& s, const Context& out,
                        std::vector<Derivation> premises) {
    if (!build_) return Derivation{r, {}, std::nullopt, std::nullopt, {}, {}};
    return Derivation{r, ctx, std::nullopt, s, out, std::move(premises)};
  }

  bool build_;
  Path path_;
};

void print_into(std::string& out, const Derivation& d, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule);
  out += ": ";
  out += print_context(d.input);
  out += " |- ";
  if (d.is_subst()) {
    out += print_subst(*d.subst);
    out += " |> ";
    out += print_context(d.output);
  } else {
    out += print_term(*d.term);
  }
  out += '\n';
  for (const auto& p : d.premises) print_into(out, p, depth + 1);
}

}  // namespace

Derivation derive(const Context& ctx, const Term& a) {
  Checker c(true);
  auto d = c.term(ctx, a);
  if (!d) throw *c.failure;
  return std::move(*d);
}

std::pair<Derivation, Context> derive_subst(const Context& ctx, const Subst& s) {
  Checker c(true);
  auto d = c.subst(ctx, s);
  if (!d) throw *c.failure;
  return std::move(*d);
}

bool derivable(const Context& ctx, const Term& a) {
  Checker c(false);
  return c.term(ctx, a).has_value();
}

std::optional<Context> subst_output(const Context& ctx, const Subst& s) {
  Checker c(false);
  auto d = c.subst(ctx, s);
  if (!d) return std::nullopt;
  return std::move(d->second);
}

Context well_formed(const Term& a) {
  auto ctx = fv(a);
  if (!ctx) throw IllFormed("FV(" + print_term(a) + ") is undefined");
  Checker c(false);
  if (!c.term(*ctx, a)) {
    throw IllFormed("not derivable in FV = " + print_context(*ctx) + ": " + c.failure->reason());
  }
  return std::move(*ctx);
}

bool is_well_formed(const Term& a) {
  auto ctx = fv_fast(a);
  return ctx && derivable(*ctx, a);
}

bool is_good(const Term& a) {
  auto ctx = fv_fast(a);
  return ctx && ctx->local.empty() && derivable(*ctx, a);
}

std::string print_derivation(const Derivation& d) {
  std::string out;
  print_into(out, d, 0);
  return out;
}

}  // namespace lalpha
