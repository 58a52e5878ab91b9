#include "lalpha/normalforms.hpp"

#include "lalpha/syntax.hpp"

namespace lalpha {

std::optional<Block> as_block(const Term& t) {
  Block b;
  Term cur = t;
  while (cur.is_comp() && cur.subst().kind() == SubstKind::Weak) {
    b.spine.push_back(cur.subst().var());
    cur = cur.body();
  }
  if (b.spine.empty() || !cur.is_var() || cur.name() != b.spine.back()) return std::nullopt;
  b.core = cur.name();
  return b;
}

bool is_sigma_nf(const Term& a) {
  switch (a.kind()) {
    case TermKind::Var: return true;
    case TermKind::App: return is_sigma_nf(a.left()) && is_sigma_nf(a.right());
    case TermKind::Lam: return is_sigma_nf(a.body());
    case TermKind::Comp: return as_block(a).has_value();
  }
  return false;
}

std::optional<PureTerm> PureTerm::from(const Term& t) {
  if (!is_pure(t)) return std::nullopt;
  return PureTerm(t);
}

ContainsBlock::ContainsBlock(Path path, Term offending)
    : std::runtime_error("substitution left in normal form: " + print_term(offending)),
      path_(std::move(path)),
      offending_(std::move(offending)) {}

namespace {

std::optional<std::pair<Path, Term>> first_comp(const Term& t, Path& path) {
  switch (t.kind()) {
    case TermKind::Var:
      return std::nullopt;
    case TermKind::Comp:
      return std::pair{path, t};
    case TermKind::Lam: {
      path.push_back(Step::LamBody);
      auto r = first_comp(t.body(), path);
      path.pop_back();
      return r;
    }
    case TermKind::App: {
      path.push_back(Step::AppLeft);
      auto r = first_comp(t.left(), path);
      path.back() = Step::AppRight;
      if (!r) r = first_comp(t.right(), path);
      path.pop_back();
      return r;
    }
  }
  return std::nullopt;
}

}  // namespace

PureTerm to_pure(const Term& a) {
  Path path;
  if (auto hit = first_comp(a, path)) throw ContainsBlock(std::move(hit->first), std::move(hit->second));
  return *PureTerm::from(a);
}

}  // namespace lalpha
