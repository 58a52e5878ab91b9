#include "lalpha/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace lalpha {

namespace {

void collect_fv(const Term& t, std::vector<Var>& bound, std::set<Var>& out) {
  switch (t.kind()) {
    case TermKind::Var:
      for (const Var& b : bound) {
        if (b == t.name()) return;
      }
      out.insert(t.name());
      return;
    case TermKind::App:
      collect_fv(t.left(), bound, out);
      collect_fv(t.right(), bound, out);
      return;
    case TermKind::Lam:
      bound.push_back(t.name());
      collect_fv(t.body(), bound, out);
      bound.pop_back();
      return;
    case TermKind::Comp:
      throw std::invalid_argument("classical oracle only takes pure terms");
  }
}

Var rename_away(const Var& base, const std::set<Var>& avoid) {
  for (std::size_t i = 1;; ++i) {
    Var v = base + "_" + std::to_string(i);
    if (!avoid.contains(v)) return v;
  }
}

std::optional<Term> contract_leftmost(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return std::nullopt;
    case TermKind::Lam:
      if (auto b = contract_leftmost(t.body())) return Term::lam(t.name(), *b);
      return std::nullopt;
    case TermKind::App:
      if (t.left().is_lam()) return classical_subst(t.left().body(), t.left().name(), t.right());
      if (auto l = contract_leftmost(t.left())) return Term::app(*l, t.right());
      if (auto r = contract_leftmost(t.right())) return Term::app(t.left(), *r);
      return std::nullopt;
    case TermKind::Comp:
      break;
  }
  throw std::invalid_argument("classical oracle only takes pure terms");
}

bool alpha_eq(const Term& a, const Term& b, std::vector<Var>& ea, std::vector<Var>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Var: {
      auto depth = [](const std::vector<Var>& env, const Var& x) -> std::ptrdiff_t {
        for (std::size_t i = env.size(); i-- > 0;) {
          if (env[i] == x) return static_cast<std::ptrdiff_t>(env.size() - i);
        }
        return -1;
      };
      const auto da = depth(ea, a.name());
      const auto db = depth(eb, b.name());
      if (da < 0 && db < 0) return a.name() == b.name();
      return da == db;
    }
    case TermKind::App:
      return alpha_eq(a.left(), b.left(), ea, eb) && alpha_eq(a.right(), b.right(), ea, eb);
    case TermKind::Lam: {
      ea.push_back(a.name());
      eb.push_back(b.name());
      const bool r = alpha_eq(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return r;
    }
    case TermKind::Comp:
      break;
  }
  throw std::invalid_argument("classical oracle only takes pure terms");
}

}  // namespace

std::set<Var> classical_fv(const Term& t) {
  std::vector<Var> bound;
  std::set<Var> out;
  collect_fv(t, bound, out);
  return out;
}

Term classical_subst(const Term& t, const Var& x, const Term& n) {
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == x ? n : t;
    case TermKind::App:
      return Term::app(classical_subst(t.left(), x, n), classical_subst(t.right(), x, n));
    case TermKind::Lam: {
      const Var& y = t.name();
      if (y == x) return t;
      const auto fv_body = classical_fv(t.body());
      if (!fv_body.contains(x)) return t;
      const auto fv_n = classical_fv(n);
      if (!fv_n.contains(y)) return Term::lam(y, classical_subst(t.body(), x, n));
      std::set<Var> avoid = fv_n;
      avoid.insert(fv_body.begin(), fv_body.end());
      avoid.insert(x);
      const Var y2 = rename_away(y, avoid);
      return Term::lam(y2, classical_subst(classical_subst(t.body(), y, Term::var(y2)), x, n));
    }
    case TermKind::Comp:
      break;
  }
  throw std::invalid_argument("classical oracle only takes pure terms");
}

std::optional<Term> classical_normalize(const Term& t, std::size_t fuel) {
  Term cur = t;
  for (std::size_t used = 0;; ++used) {
    auto next = contract_leftmost(cur);
    if (!next) return cur;
    if (used == fuel) return std::nullopt;
    cur = std::move(*next);
  }
}

bool classical_alpha_eq(const Term& a, const Term& b) {
  std::vector<Var> ea, eb;
  return alpha_eq(a, b, ea, eb);
}

}  // namespace lalpha
