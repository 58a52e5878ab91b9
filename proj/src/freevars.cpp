#include "lalpha/freevars.hpp"

namespace lalpha {

std::optional<Context> fv(const Term& a) {
  switch (a.kind()) {
    case TermKind::Var:
      return Context{{a.name()}, {}};
    case TermKind::App: {
      auto l = fv(a.left());
      if (!l) return std::nullopt;
      auto r = fv(a.right());
      if (!r) return std::nullopt;
      return ctx_sup(*l, *r);
    }
    case TermKind::Lam: {
      auto b = fv(a.body());
      if (!b) return std::nullopt;
      return o_lambda(a.name(), *b);
    }
    case TermKind::Comp:
      break;
  }
  const Subst s = a.subst();
  const Term body = a.body();
  switch (s.kind()) {
    case SubstKind::Weak: {
      auto b = fv(body);
      if (!b) return std::nullopt;
      return b->pushed(s.var());
    }
    case SubstKind::Slash:
      // FV([B/x]∘A) = FV((λx.A)B)
      return fv(Term::app(Term::lam(s.var(), body), s.term()));
    case SubstKind::Rename:
      // FV({y x}∘A) = FV(W y ∘ λx.A)
      return fv(Term::comp(Subst::weak(s.new_var()), Term::lam(s.var(), body)));
    case SubstKind::Lift:
      // FV(S_x∘A) = FV(W x ∘ S ∘ λx.A)
      return fv(Term::comp(Subst::weak(s.var()), Term::comp(s.inner(), Term::lam(s.var(), body))));
  }
  return std::nullopt;
}

std::optional<Context> FvMemo::of_comp(const Subst& s, const std::optional<Context>& fv_a) {
  if (!fv_a) return std::nullopt;
  switch (s.kind()) {
    case SubstKind::Weak:
      return fv_a->pushed(s.var());
    case SubstKind::Slash: {
      auto lam = o_lambda(s.var(), *fv_a);
      if (!lam) return std::nullopt;
      auto b = of(s.term());
      if (!b) return std::nullopt;
      return ctx_sup(*lam, *b);
    }
    case SubstKind::Rename: {
      auto lam = o_lambda(s.var(), *fv_a);
      if (!lam) return std::nullopt;
      return lam->pushed(s.new_var());
    }
    case SubstKind::Lift: {
      auto inner = of_comp(s.inner(), o_lambda(s.var(), *fv_a));
      if (!inner) return std::nullopt;
      return inner->pushed(s.var());
    }
  }
  return std::nullopt;
}

std::optional<Context> FvMemo::of(const Term& a) {
  if (auto it = memo_.find(a.identity()); it != memo_.end()) return it->second;
  std::optional<Context> out;
  switch (a.kind()) {
    case TermKind::Var:
      out = Context{{a.name()}, {}};
      break;
    case TermKind::App: {
      auto l = of(a.left());
      auto r = of(a.right());
      if (l && r) out = ctx_sup(*l, *r);
      break;
    }
    case TermKind::Lam: {
      auto b = of(a.body());
      if (b) out = o_lambda(a.name(), *b);
      break;
    }
    case TermKind::Comp:
      out = of_comp(a.subst(), of(a.body()));
      break;
  }
  memo_.emplace(a.identity(), out);
  return out;
}

std::optional<Context> fv_fast(const Term& a) {
  FvMemo memo;
  return memo.of(a);
}

}  // namespace lalpha
