#include "lalpha/term.hpp"

#include <functional>
#include <stdexcept>

namespace lalpha {

namespace detail {

struct TermNode {
  TermKind kind;
  Var name;
  std::shared_ptr<const TermNode> a;
  std::shared_ptr<const TermNode> b;
  std::shared_ptr<const SubstNode> s;
  std::size_t size = 1;
  std::size_t hash = 0;
};

struct SubstNode {
  SubstKind kind;
  Var x;
  Var y;
  std::shared_ptr<const TermNode> term;
  std::shared_ptr<const SubstNode> inner;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t name_hash(const Var& v) { return std::hash<Var>{}(v); }

bool equal_nodes(const TermNode* a, const TermNode* b);

bool equal_nodes(const SubstNode* a, const SubstNode* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case SubstKind::Slash:
      return a->x == b->x && equal_nodes(a->term.get(), b->term.get());
    case SubstKind::Weak:
      return a->x == b->x;
    case SubstKind::Rename:
      return a->x == b->x && a->y == b->y;
    case SubstKind::Lift:
      return a->x == b->x && equal_nodes(a->inner.get(), b->inner.get());
  }
  return false;
}

bool equal_nodes(const TermNode* a, const TermNode* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case TermKind::Var:
      return a->name == b->name;
    case TermKind::App:
      return equal_nodes(a->a.get(), b->a.get()) && equal_nodes(a->b.get(), b->b.get());
    case TermKind::Lam:
      return a->name == b->name && equal_nodes(a->a.get(), b->a.get());
    case TermKind::Comp:
      return equal_nodes(a->s.get(), b->s.get()) && equal_nodes(a->a.get(), b->a.get());
  }
  return false;
}

}  // namespace
}  // namespace detail

using detail::SubstNode;
using detail::TermNode;

Term Term::var(Var name) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Var;
  n->hash = detail::mix(1, detail::name_hash(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::App;
  n->size = 1 + fn.size() + arg.size();
  n->hash = detail::mix(detail::mix(2, fn.hash()), arg.hash());
  n->a = std::move(fn.node_);
  n->b = std::move(arg.node_);
  return Term(std::move(n));
}

Term Term::lam(Var binder, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Lam;
  n->size = 1 + body.size();
  n->hash = detail::mix(detail::mix(3, detail::name_hash(binder)), body.hash());
  n->name = std::move(binder);
  n->a = std::move(body.node_);
  return Term(std::move(n));
}

Term Term::comp(Subst s, Term body) {
  auto n = std::make_shared<TermNode>();
  n->kind = TermKind::Comp;
  n->size = 1 + s.size() + body.size();
  n->hash = detail::mix(detail::mix(4, s.hash()), body.hash());
  n->s = std::move(s.node_);
  n->a = std::move(body.node_);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const Var& Term::name() const { return node_->name; }
Term Term::left() const { return Term(node_->a); }
Term Term::right() const { return Term(node_->b); }
Term Term::body() const { return Term(node_->a); }
Subst Term::subst() const { return Subst(node_->s); }
std::size_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) { return detail::equal_nodes(a.node_.get(), b.node_.get()); }

Subst Subst::slash(Term b, Var x) {
  auto n = std::make_shared<SubstNode>();
  n->kind = SubstKind::Slash;
  n->size = 1 + b.size();
  n->hash = detail::mix(detail::mix(5, b.hash()), detail::name_hash(x));
  n->x = std::move(x);
  n->term = std::move(b.node_);
  return Subst(std::move(n));
}

Subst Subst::weak(Var x) {
  auto n = std::make_shared<SubstNode>();
  n->kind = SubstKind::Weak;
  n->hash = detail::mix(6, detail::name_hash(x));
  n->x = std::move(x);
  return Subst(std::move(n));
}

Subst Subst::rename(Var y, Var x) {
  auto n = std::make_shared<SubstNode>();
  n->kind = SubstKind::Rename;
  n->hash = detail::mix(detail::mix(7, detail::name_hash(y)), detail::name_hash(x));
  n->x = std::move(x);
  n->y = std::move(y);
  return Subst(std::move(n));
}

Subst Subst::lift(Subst inner, Var x) {
  auto n = std::make_shared<SubstNode>();
  n->kind = SubstKind::Lift;
  n->size = 1 + inner.size();
  n->hash = detail::mix(detail::mix(8, inner.hash()), detail::name_hash(x));
  n->x = std::move(x);
  n->inner = std::move(inner.node_);
  return Subst(std::move(n));
}

SubstKind Subst::kind() const { return node_->kind; }
const Var& Subst::var() const { return node_->x; }
const Var& Subst::new_var() const { return node_->y; }
Term Subst::term() const { return Term(node_->term); }
Subst Subst::inner() const { return Subst(node_->inner); }
std::size_t Subst::size() const { return node_->size; }
std::size_t Subst::hash() const { return node_->hash; }

bool operator==(const Subst& a, const Subst& b) { return detail::equal_nodes(a.node_.get(), b.node_.get()); }

int child_index(Step step) {
  switch (step) {
    case Step::AppRight:
    case Step::CompBody:
      return 1;
    default:
      return 0;
  }
}

const char* step_name(Step step) {
  switch (step) {
    case Step::AppLeft: return "AppLeft";
    case Step::AppRight: return "AppRight";
    case Step::LamBody: return "LamBody";
    case Step::CompSubst: return "CompSubst";
    case Step::CompBody: return "CompBody";
    case Step::SlashBody: return "SlashBody";
    case Step::LiftInner: return "LiftInner";
  }
  return "?";
}

std::vector<int> path_indices(const Path& path) {
  std::vector<int> out;
  out.reserve(path.size());
  for (Step s : path) out.push_back(child_index(s));
  return out;
}

namespace {

// A cursor is either at a term or at a substitution.
struct Cursor {
  std::optional<Term> term;
  std::optional<Subst> subst;
};

bool advance(Cursor& c, Step step) {
  if (c.term) {
    const Term t = *c.term;
    switch (step) {
      case Step::AppLeft:
        if (!t.is_app()) return false;
        c.term = t.left();
        return true;
      case Step::AppRight:
        if (!t.is_app()) return false;
        c.term = t.right();
        return true;
      case Step::LamBody:
        if (!t.is_lam()) return false;
        c.term = t.body();
        return true;
      case Step::CompBody:
        if (!t.is_comp()) return false;
        c.term = t.body();
        return true;
      case Step::CompSubst:
        if (!t.is_comp()) return false;
        c.subst = t.subst();
        c.term.reset();
        return true;
      default:
        return false;
    }
  }
  const Subst s = *c.subst;
  switch (step) {
    case Step::SlashBody:
      if (s.kind() != SubstKind::Slash) return false;
      c.term = s.term();
      c.subst.reset();
      return true;
    case Step::LiftInner:
      if (s.kind() != SubstKind::Lift) return false;
      c.subst = s.inner();
      return true;
    default:
      return false;
  }
}

Term replace_term(const Term& t, const Path& path, std::size_t i, const Term& repl);

Subst replace_subst(const Subst& s, const Path& path, std::size_t i, const Term& repl) {
  if (i == path.size()) throw std::out_of_range("path ends at a substitution");
  switch (path[i]) {
    case Step::SlashBody:
      if (s.kind() != SubstKind::Slash) break;
      return Subst::slash(replace_term(s.term(), path, i + 1, repl), s.var());
    case Step::LiftInner:
      if (s.kind() != SubstKind::Lift) break;
      return Subst::lift(replace_subst(s.inner(), path, i + 1, repl), s.var());
    default:
      break;
  }
  throw std::out_of_range("invalid path step into substitution");
}

Term replace_term(const Term& t, const Path& path, std::size_t i, const Term& repl) {
  if (i == path.size()) return repl;
  switch (path[i]) {
    case Step::AppLeft:
      if (!t.is_app()) break;
      return Term::app(replace_term(t.left(), path, i + 1, repl), t.right());
    case Step::AppRight:
      if (!t.is_app()) break;
      return Term::app(t.left(), replace_term(t.right(), path, i + 1, repl));
    case Step::LamBody:
      if (!t.is_lam()) break;
      return Term::lam(t.name(), replace_term(t.body(), path, i + 1, repl));
    case Step::CompBody:
      if (!t.is_comp()) break;
      return Term::comp(t.subst(), replace_term(t.body(), path, i + 1, repl));
    case Step::CompSubst:
      if (!t.is_comp()) break;
      return Term::comp(replace_subst(t.subst(), path, i + 1, repl), t.body());
    default:
      break;
  }
  throw std::out_of_range("invalid path step into term");
}

}  // namespace

std::optional<Term> term_at(const Term& root, const Path& path) {
  Cursor c{root, std::nullopt};
  for (Step s : path) {
    if (!advance(c, s)) return std::nullopt;
  }
  return c.term;
}

Term replace_at(const Term& root, const Path& path, const Term& replacement) {
  return replace_term(root, path, 0, replacement);
}

bool is_pure(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var: return true;
    case TermKind::App: return is_pure(t.left()) && is_pure(t.right());
    case TermKind::Lam: return is_pure(t.body());
    case TermKind::Comp: return false;
  }
  return false;
}

}  // namespace lalpha
