#include "lalpha/debruijn.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "lalpha/freevars.hpp"
#include "lalpha/rewrite.hpp"

namespace lalpha {

namespace detail {

struct DBTermNode {
  DBKind kind;
  Var name;
  std::shared_ptr<const DBTermNode> a;
  std::shared_ptr<const DBTermNode> b;
  std::shared_ptr<const DBSubNode> s;
  std::size_t size = 1;
  std::size_t hash = 0;
};

struct DBSubNode {
  DBSubKind kind;
  std::shared_ptr<const DBTermNode> term;
  std::shared_ptr<const DBSubNode> inner;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool same(const DBTermNode* a, const DBTermNode* b);

bool same(const DBSubNode* a, const DBSubNode* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case DBSubKind::Slash: return same(a->term.get(), b->term.get());
    case DBSubKind::Lift: return same(a->inner.get(), b->inner.get());
    default: return true;
  }
}

bool same(const DBTermNode* a, const DBTermNode* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
  switch (a->kind) {
    case DBKind::Name: return a->name == b->name;
    case DBKind::One: return true;
    case DBKind::App: return same(a->a.get(), b->a.get()) && same(a->b.get(), b->b.get());
    case DBKind::Lam:
    case DBKind::BoldLam: return same(a->a.get(), b->a.get());
    case DBKind::Comp: return same(a->s.get(), b->s.get()) && same(a->a.get(), b->a.get());
  }
  return false;
}

}  // namespace
}  // namespace detail

using detail::DBSubNode;
using detail::DBTermNode;
using detail::mix;

namespace {

DBTermNode* fresh_term(std::shared_ptr<DBTermNode>& holder, DBKind k) {
  holder = std::make_shared<DBTermNode>();
  holder->kind = k;
  return holder.get();
}

}  // namespace

DBTerm DBTerm::name(Var x) {
  std::shared_ptr<DBTermNode> h;
  auto* n = fresh_term(h, DBKind::Name);
  n->hash = mix(11, std::hash<Var>{}(x));
  n->name = std::move(x);
  return DBTerm(std::move(h));
}

DBTerm DBTerm::one() {
  static const DBTerm shared = [] {
    std::shared_ptr<DBTermNode> h;
    fresh_term(h, DBKind::One)->hash = 12;
    return DBTerm(std::move(h));
  }();
  return shared;
}

DBTerm DBTerm::app(DBTerm a, DBTerm b) {
  std::shared_ptr<DBTermNode> h;
  auto* n = fresh_term(h, DBKind::App);
  n->size = 1 + a.size() + b.size();
  n->hash = mix(mix(13, a.hash()), b.hash());
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return DBTerm(std::move(h));
}

DBTerm DBTerm::lam(DBTerm a) {
  std::shared_ptr<DBTermNode> h;
  auto* n = fresh_term(h, DBKind::Lam);
  n->size = 1 + a.size();
  n->hash = mix(14, a.hash());
  n->a = std::move(a.node_);
  return DBTerm(std::move(h));
}

DBTerm DBTerm::bold_lam(DBTerm a) {
  std::shared_ptr<DBTermNode> h;
  auto* n = fresh_term(h, DBKind::BoldLam);
  n->size = 1 + a.size();
  n->hash = mix(15, a.hash());
  n->a = std::move(a.node_);
  return DBTerm(std::move(h));
}

DBTerm DBTerm::comp(DBSub s, DBTerm a) {
  std::shared_ptr<DBTermNode> h;
  auto* n = fresh_term(h, DBKind::Comp);
  n->size = 1 + s.size() + a.size();
  n->hash = mix(mix(16, s.hash()), a.hash());
  n->s = std::move(s.node_);
  n->a = std::move(a.node_);
  return DBTerm(std::move(h));
}

DBKind DBTerm::kind() const { return node_->kind; }
const Var& DBTerm::name() const { return node_->name; }
DBTerm DBTerm::left() const { return DBTerm(node_->a); }
DBTerm DBTerm::right() const { return DBTerm(node_->b); }
DBTerm DBTerm::body() const { return DBTerm(node_->a); }
DBSub DBTerm::sub() const { return DBSub(node_->s); }
std::size_t DBTerm::size() const { return node_->size; }
std::size_t DBTerm::hash() const { return node_->hash; }
bool operator==(const DBTerm& a, const DBTerm& b) { return detail::same(a.node_.get(), b.node_.get()); }

DBSub DBSub::slash(DBTerm b) {
  auto n = std::make_shared<DBSubNode>();
  n->kind = DBSubKind::Slash;
  n->size = 1 + b.size();
  n->hash = mix(17, b.hash());
  n->term = std::move(b.node_);
  return DBSub(std::move(n));
}

DBSub DBSub::shift() {
  static const DBSub shared = [] {
    auto n = std::make_shared<DBSubNode>();
    n->kind = DBSubKind::Shift;
    n->hash = 18;
    return DBSub(std::move(n));
  }();
  return shared;
}

DBSub DBSub::id() {
  static const DBSub shared = [] {
    auto n = std::make_shared<DBSubNode>();
    n->kind = DBSubKind::Id;
    n->hash = 19;
    return DBSub(std::move(n));
  }();
  return shared;
}

DBSub DBSub::lift(DBSub s) {
  auto n = std::make_shared<DBSubNode>();
  n->kind = DBSubKind::Lift;
  n->size = 1 + s.size();
  n->hash = mix(20, s.hash());
  n->inner = std::move(s.node_);
  return DBSub(std::move(n));
}

DBSubKind DBSub::kind() const { return node_->kind; }
DBTerm DBSub::term() const { return DBTerm(node_->term); }
DBSub DBSub::inner() const { return DBSub(node_->inner); }
std::size_t DBSub::size() const { return node_->size; }
std::size_t DBSub::hash() const { return node_->hash; }
bool operator==(const DBSub& a, const DBSub& b) { return detail::same(a.node_.get(), b.node_.get()); }

// ---- paths ------------------------------------------------------------------

namespace {

bool is_lambda(const DBTerm& t) { return t.kind() == DBKind::Lam || t.kind() == DBKind::BoldLam; }

DBTerm rebuild_lambda(const DBTerm& like, DBTerm body) {
  return like.kind() == DBKind::Lam ? DBTerm::lam(std::move(body)) : DBTerm::bold_lam(std::move(body));
}

DBTerm replace_term(const DBTerm& t, const Path& path, std::size_t i, const DBTerm& repl);

DBSub replace_sub(const DBSub& s, const Path& path, std::size_t i, const DBTerm& repl) {
  if (i < path.size()) {
    if (path[i] == Step::SlashBody && s.kind() == DBSubKind::Slash) {
      return DBSub::slash(replace_term(s.term(), path, i + 1, repl));
    }
    if (path[i] == Step::LiftInner && s.kind() == DBSubKind::Lift) {
      return DBSub::lift(replace_sub(s.inner(), path, i + 1, repl));
    }
  }
  throw std::out_of_range("invalid path into de Bruijn substitution");
}

DBTerm replace_term(const DBTerm& t, const Path& path, std::size_t i, const DBTerm& repl) {
  if (i == path.size()) return repl;
  const DBKind k = t.kind();
  switch (path[i]) {
    case Step::AppLeft:
      if (k == DBKind::App) return DBTerm::app(replace_term(t.left(), path, i + 1, repl), t.right());
      break;
    case Step::AppRight:
      if (k == DBKind::App) return DBTerm::app(t.left(), replace_term(t.right(), path, i + 1, repl));
      break;
    case Step::LamBody:
      if (is_lambda(t)) return rebuild_lambda(t, replace_term(t.body(), path, i + 1, repl));
      break;
    case Step::CompBody:
      if (k == DBKind::Comp) return DBTerm::comp(t.sub(), replace_term(t.body(), path, i + 1, repl));
      break;
    case Step::CompSubst:
      if (k == DBKind::Comp) return DBTerm::comp(replace_sub(t.sub(), path, i + 1, repl), t.body());
      break;
    default:
      break;
  }
  throw std::out_of_range("invalid path into de Bruijn term");
}

}  // namespace

std::optional<DBTerm> db_term_at(const DBTerm& root, const Path& path) {
  std::optional<DBTerm> t = root;
  std::optional<DBSub> s;
  for (Step step : path) {
    if (t) {
      const DBKind k = t->kind();
      if ((step == Step::AppLeft || step == Step::AppRight) && k == DBKind::App) {
        t = step == Step::AppLeft ? t->left() : t->right();
      } else if (step == Step::LamBody && is_lambda(*t)) {
        t = t->body();
      } else if (step == Step::CompBody && k == DBKind::Comp) {
        t = t->body();
      } else if (step == Step::CompSubst && k == DBKind::Comp) {
        s = t->sub();
        t.reset();
      } else {
        return std::nullopt;
      }
    } else if (step == Step::SlashBody && s->kind() == DBSubKind::Slash) {
      t = s->term();
      s.reset();
    } else if (step == Step::LiftInner && s->kind() == DBSubKind::Lift) {
      s = s->inner();
    } else {
      return std::nullopt;
    }
  }
  return t;
}

DBTerm db_replace_at(const DBTerm& root, const Path& path, const DBTerm& replacement) {
  return replace_term(root, path, 0, replacement);
}

// ---- checking ---------------------------------------------------------------

bool db_check(std::size_t n, const DBTerm& a) {
  switch (a.kind()) {
    case DBKind::Name: return n == 0;
    case DBKind::One: return n >= 1;
    case DBKind::App: return db_check(n, a.left()) && db_check(n, a.right());
    case DBKind::Lam:
    case DBKind::BoldLam: return db_check(n + 1, a.body());
    case DBKind::Comp: {
      auto m = db_check_sub(n, a.sub());
      return m && db_check(*m, a.body());
    }
  }
  return false;
}

std::optional<std::size_t> db_check_sub(std::size_t n, const DBSub& s) {
  switch (s.kind()) {
    case DBSubKind::Slash:
      if (!db_check(n, s.term())) return std::nullopt;
      return n + 1;
    case DBSubKind::Shift:
      if (n == 0) return std::nullopt;
      return n - 1;
    case DBSubKind::Id:
      if (n == 0) return std::nullopt;
      return n;
    case DBSubKind::Lift: {
      if (n == 0) return std::nullopt;
      auto m = db_check_sub(n - 1, s.inner());
      if (!m) return std::nullopt;
      return *m + 1;
    }
  }
  return std::nullopt;
}

// ---- rewriting --------------------------------------------------------------

const char* db_rule_name(DBRule r) {
  static const char* names[] = {"Beta",    "App",     "Lambda", "Lambda'", "Lambda''", "Lambda'''", "Var",
                                "Shift",   "VarId",   "ShiftId", "VarLift", "ShiftLift", "Alpha",    "Xi"};
  return names[static_cast<int>(r)];
}

bool db_system_has(DBSystem sys, DBRule r) {
  switch (r) {
    case DBRule::Beta:
      return sys == DBSystem::LambdaUpsilon;
    case DBRule::LambdaP:
    case DBRule::LambdaPP:
    case DBRule::LambdaPPP:
    case DBRule::Alpha:
    case DBRule::Xi:
      return sys == DBSystem::Upsilon2;
    default:
      return true;
  }
}

namespace {

bool is_shifted(const DBTerm& t) { return t.kind() == DBKind::Comp && t.sub().kind() == DBSubKind::Shift; }

std::vector<DBRule> shapes_at(const DBTerm& t) {
  std::vector<DBRule> out;
  switch (t.kind()) {
    case DBKind::App:
      if (t.left().kind() == DBKind::Lam) out.push_back(DBRule::Beta);
      break;
    case DBKind::BoldLam:
      out.push_back(DBRule::Alpha);
      out.push_back(DBRule::Xi);
      break;
    case DBKind::Comp: {
      const DBSub s = t.sub();
      const DBTerm a = t.body();
      if (a.kind() == DBKind::App) out.push_back(DBRule::App);
      if (a.kind() == DBKind::Lam) {
        out.push_back(DBRule::Lambda);
        out.push_back(DBRule::LambdaP);
      }
      if (a.kind() == DBKind::BoldLam) {
        out.push_back(DBRule::LambdaPP);
        out.push_back(DBRule::LambdaPPP);
      }
      const bool one = a.kind() == DBKind::One;
      switch (s.kind()) {
        case DBSubKind::Slash:
          if (one) out.push_back(DBRule::Var);
          if (is_shifted(a)) out.push_back(DBRule::Shift);
          break;
        case DBSubKind::Id:
          if (one) out.push_back(DBRule::VarId);
          if (is_shifted(a)) out.push_back(DBRule::ShiftId);
          break;
        case DBSubKind::Lift:
          if (one) out.push_back(DBRule::VarLift);
          if (is_shifted(a)) out.push_back(DBRule::ShiftLift);
          break;
        case DBSubKind::Shift:
          break;
      }
      break;
    }
    default:
      break;
  }
  return out;
}

DBTerm contract(const DBTerm& t, DBRule rule) {
  const auto shapes = shapes_at(t);
  if (std::find(shapes.begin(), shapes.end(), rule) == shapes.end()) {
    throw InvalidRedex(std::string(db_rule_name(rule)) + " does not match " + print_db(t));
  }
  switch (rule) {
    case DBRule::Beta:
      return DBTerm::comp(DBSub::slash(t.right()), t.left().body());
    case DBRule::Alpha:
      return DBTerm::lam(DBTerm::comp(DBSub::id(), t.body()));
    case DBRule::Xi:
      return DBTerm::lam(t.body());
    default:
      break;
  }
  const DBSub s = t.sub();
  const DBTerm a = t.body();
  switch (rule) {
    case DBRule::App:
      return DBTerm::app(DBTerm::comp(s, a.left()), DBTerm::comp(s, a.right()));
    case DBRule::Lambda:
    case DBRule::LambdaPP:
      return DBTerm::lam(DBTerm::comp(DBSub::lift(s), a.body()));
    case DBRule::LambdaP:
    case DBRule::LambdaPPP:
      return DBTerm::bold_lam(DBTerm::comp(DBSub::lift(s), a.body()));
    case DBRule::Var:
      return s.term();
    case DBRule::Shift:
      return a.body();
    case DBRule::VarId:
    case DBRule::VarLift:
      return a;
    case DBRule::ShiftId:
      return a;
    case DBRule::ShiftLift:
      return DBTerm::comp(DBSub::shift(), DBTerm::comp(s.inner(), a.body()));
    default:
      break;
  }
  throw InvalidRedex("unhandled de Bruijn rule");
}

void collect(const DBTerm& t, DBSystem sys, Path& path, std::vector<DBRedex>& out);

void collect_sub(const DBSub& s, DBSystem sys, Path& path, std::vector<DBRedex>& out) {
  if (s.kind() == DBSubKind::Slash) {
    path.push_back(Step::SlashBody);
    collect(s.term(), sys, path, out);
    path.pop_back();
  } else if (s.kind() == DBSubKind::Lift) {
    path.push_back(Step::LiftInner);
    collect_sub(s.inner(), sys, path, out);
    path.pop_back();
  }
}

void collect(const DBTerm& t, DBSystem sys, Path& path, std::vector<DBRedex>& out) {
  for (DBRule r : db_match_root(t, sys)) out.push_back({path, r});
  auto down = [&](Step st, const DBTerm& c) {
    path.push_back(st);
    collect(c, sys, path, out);
    path.pop_back();
  };
  switch (t.kind()) {
    case DBKind::App:
      down(Step::AppLeft, t.left());
      down(Step::AppRight, t.right());
      break;
    case DBKind::Lam:
    case DBKind::BoldLam:
      down(Step::LamBody, t.body());
      break;
    case DBKind::Comp:
      path.push_back(Step::CompSubst);
      collect_sub(t.sub(), sys, path, out);
      path.pop_back();
      down(Step::CompBody, t.body());
      break;
    default:
      break;
  }
}

class UpsilonNormalizer {
 public:
  DBTerm term(const DBTerm& t) {
    if (auto it = done_.find(t.identity()); it != done_.end()) return it->second;
    DBTerm out = step(t);
    keep_.push_back(t);
    keep_.push_back(out);
    done_.emplace(t.identity(), out);
    done_.emplace(out.identity(), out);
    return out;
  }

 private:
  DBTerm step(const DBTerm& t) {
    switch (t.kind()) {
      case DBKind::Name:
      case DBKind::One:
        return t;
      case DBKind::App:
        return DBTerm::app(term(t.left()), term(t.right()));
      case DBKind::Lam:
        return DBTerm::lam(term(t.body()));
      case DBKind::BoldLam:
        return DBTerm::bold_lam(term(t.body()));
      case DBKind::Comp: {
        DBTerm c = DBTerm::comp(sub(t.sub()), term(t.body()));
        auto rules = db_match_root(c, DBSystem::Upsilon);
        if (rules.empty()) return c;
        return term(contract(c, rules.front()));
      }
    }
    return t;
  }

  DBSub sub(const DBSub& s) {
    switch (s.kind()) {
      case DBSubKind::Slash: return DBSub::slash(term(s.term()));
      case DBSubKind::Lift: return DBSub::lift(sub(s.inner()));
      default: return s;
    }
  }

  std::unordered_map<const void*, DBTerm> done_;
  std::vector<DBTerm> keep_;
};

}  // namespace

std::vector<DBRule> db_match_root(const DBTerm& t, DBSystem sys) {
  std::vector<DBRule> out;
  for (DBRule r : shapes_at(t)) {
    if (db_system_has(sys, r)) out.push_back(r);
  }
  return out;
}

std::vector<DBRedex> db_find_redexes(const DBTerm& a, DBSystem sys) {
  std::vector<DBRedex> out;
  Path path;
  collect(a, sys, path, out);
  return out;
}

DBTerm db_apply(const DBTerm& a, const Path& at, DBRule rule) {
  auto sub = db_term_at(a, at);
  if (!sub) throw InvalidRedex("path does not address a de Bruijn term");
  return db_replace_at(a, at, contract(*sub, rule));
}

std::vector<DBReduct> db_reducts(const DBTerm& a, DBSystem sys) {
  std::vector<DBReduct> out;
  for (DBRedex& r : db_find_redexes(a, sys)) {
    DBTerm b = db_apply(a, r.path, r.rule);
    out.push_back({std::move(r), std::move(b)});
  }
  return out;
}

DBTerm db_normalize_upsilon(const DBTerm& a) {
  UpsilonNormalizer n;
  return n.term(a);
}

bool db_free_of_slash_id_lift(const DBTerm& a) {
  switch (a.kind()) {
    case DBKind::Name:
    case DBKind::One: return true;
    case DBKind::App: return db_free_of_slash_id_lift(a.left()) && db_free_of_slash_id_lift(a.right());
    case DBKind::Lam:
    case DBKind::BoldLam: return db_free_of_slash_id_lift(a.body());
    case DBKind::Comp: return a.sub().kind() == DBSubKind::Shift && db_free_of_slash_id_lift(a.body());
  }
  return false;
}

// ---- weights ----------------------------------------------------------------

Weights12 weights12(const DBTerm& a) {
  switch (a.kind()) {
    case DBKind::Name:
    case DBKind::One:
      return {2, 2};
    case DBKind::App: {
      auto l = weights12(a.left());
      auto r = weights12(a.right());
      return {l.w1 + r.w1 + 1, l.w2 + r.w2 + 1};
    }
    case DBKind::Lam:
    case DBKind::BoldLam: {
      auto b = weights12(a.body());
      return {b.w1 + 1, b.w2 + 1};
    }
    case DBKind::Comp: {
      auto s = weights12(a.sub());
      auto b = weights12(a.body());
      return {b.w1 * s.w1, b.w2 * s.w2};
    }
  }
  return {0, 0};
}

Weights12 weights12(const DBSub& s) {
  switch (s.kind()) {
    case DBSubKind::Slash: return weights12(s.term());
    case DBSubKind::Shift:
    case DBSubKind::Id: return {2, 2};
    case DBSubKind::Lift: {
      auto i = weights12(s.inner());
      return {i.w1, 2 * i.w2};
    }
  }
  return {0, 0};
}

std::uint64_t weight(const DBTerm& a) {
  switch (a.kind()) {
    case DBKind::Name:
    case DBKind::One: return 0;
    case DBKind::App: return std::max(weight(a.left()), weight(a.right()));
    case DBKind::Lam:
    case DBKind::BoldLam: return weight(a.body()) + 1;
    case DBKind::Comp: return weight(a.sub()) + weight(a.body());
  }
  return 0;
}

std::uint64_t weight(const DBSub& s) {
  switch (s.kind()) {
    case DBSubKind::Slash: return weight(s.term());
    case DBSubKind::Shift:
    case DBSubKind::Id: return 0;
    case DBSubKind::Lift: return weight(s.inner());
  }
  return 0;
}

// ---- labelled terms and LPO -------------------------------------------------

namespace {

Labelled make(LSym sym, std::uint64_t lab, std::vector<Labelled> args, Var name = {}) {
  return std::make_shared<const LNode>(LNode{sym, lab, std::move(name), std::move(args)});
}

// Returns the labelled node together with the weight of what it denotes.
std::pair<Labelled, std::uint64_t> label_sub(const DBSub& s);

std::pair<Labelled, std::uint64_t> label_term(const DBTerm& a) {
  switch (a.kind()) {
    case DBKind::Name: return {make(LSym::Name, 0, {}, a.name()), 0};
    case DBKind::One: return {make(LSym::One, 0, {}), 0};
    case DBKind::App: {
      auto [l, wl] = label_term(a.left());
      auto [r, wr] = label_term(a.right());
      return {make(LSym::App, 0, {l, r}), std::max(wl, wr)};
    }
    case DBKind::Lam: {
      auto [b, w] = label_term(a.body());
      return {make(LSym::Lam, 0, {b}), w + 1};
    }
    case DBKind::BoldLam: {
      auto [b, w] = label_term(a.body());
      return {make(LSym::BoldLam, w + 1, {b}), w + 1};
    }
    case DBKind::Comp: {
      auto [s, ws] = label_sub(a.sub());
      auto [b, wb] = label_term(a.body());
      return {make(LSym::Comp, ws + wb, {s, b}), ws + wb};
    }
  }
  return {nullptr, 0};
}

std::pair<Labelled, std::uint64_t> label_sub(const DBSub& s) {
  switch (s.kind()) {
    case DBSubKind::Slash: {
      auto [b, w] = label_term(s.term());
      return {make(LSym::Slash, 0, {b}), w};
    }
    case DBSubKind::Shift: return {make(LSym::Shift, 0, {}), 0};
    case DBSubKind::Id: return {make(LSym::Id, 0, {}), 0};
    case DBSubKind::Lift: {
      auto [i, w] = label_sub(s.inner());
      return {make(LSym::Lift, 0, {i}), w};
    }
  }
  return {nullptr, 0};
}

bool labelled_head(LSym s) { return s == LSym::Comp || s == LSym::BoldLam; }

bool same_symbol(const LNode& a, const LNode& b) {
  if (a.sym != b.sym) return false;
  if (labelled_head(a.sym) && a.label != b.label) return false;
  if (a.sym == LSym::Name && a.name != b.name) return false;
  return true;
}

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return std::hash<const void*>{}(p.first) * 31 + std::hash<const void*>{}(p.second);
  }
};

class Lpo {
 public:
  bool gt(const Labelled& s, const Labelled& t) {
    auto key = std::pair<const void*, const void*>{s.get(), t.get()};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = compute(s, t);
    memo_.emplace(key, r);
    return r;
  }

 private:
  bool ge(const Labelled& s, const Labelled& t) { return labelled_equal(s, t) || gt(s, t); }

  bool dominates_args(const Labelled& s, const Labelled& t) {
    return std::all_of(t->args.begin(), t->args.end(), [&](const Labelled& ti) { return gt(s, ti); });
  }

  bool compute(const Labelled& s, const Labelled& t) {
    for (const Labelled& si : s->args) {
      if (ge(si, t)) return true;
    }
    if (prec_gt(s->sym, s->label, t->sym, t->label)) return dominates_args(s, t);
    if (same_symbol(*s, *t) && s->args.size() == t->args.size()) {
      for (std::size_t i = 0; i < s->args.size(); ++i) {
        if (labelled_equal(s->args[i], t->args[i])) continue;
        return gt(s->args[i], t->args[i]) && dominates_args(s, t);
      }
    }
    return false;
  }

  std::unordered_map<std::pair<const void*, const void*>, bool, PairHash> memo_;
};

}  // namespace

Labelled label(const DBTerm& a) { return label_term(a).first; }

bool labelled_equal(const Labelled& a, const Labelled& b) {
  if (a == b) return true;
  if (!same_symbol(*a, *b) || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i) {
    if (!labelled_equal(a->args[i], b->args[i])) return false;
  }
  return true;
}

bool prec_gt(LSym f, std::uint64_t i, LSym g, std::uint64_t j) {
  switch (f) {
    case LSym::Comp:
      switch (g) {
        case LSym::App:
        case LSym::Lam:
        case LSym::Lift:
        case LSym::Shift:
        case LSym::Id: return true;
        case LSym::Comp: return j < i;
        case LSym::BoldLam: return j <= i;
        default: return false;
      }
    case LSym::BoldLam:
      switch (g) {
        case LSym::Lam:
        case LSym::Id: return true;
        case LSym::BoldLam:
        case LSym::Comp: return j < i;
        // through ∘_{i-1}
        case LSym::App:
        case LSym::Lift:
        case LSym::Shift: return i >= 1;
        default: return false;
      }
    case LSym::Lift:
      return g == LSym::Shift;
    default:
      return false;
  }
}

bool lpo_gt(const Labelled& s, const Labelled& t) {
  Lpo lpo;
  return lpo.gt(s, t);
}

// ---- translation ------------------------------------------------------------

namespace {

class Translator {
 public:
  explicit Translator(Flavor f) : flavor_(f) {}

  DBTerm term(const Derivation& d) {
    switch (d.rule) {
      case Rule::R1: return DBTerm::name(d.term->name());
      case Rule::R2: return DBTerm::one();
      case Rule::R3: return DBTerm::comp(DBSub::shift(), term(d.premises.at(0)));
      case Rule::R4: return DBTerm::app(term(d.premises.at(0)), term(d.premises.at(1)));
      case Rule::R5: {
        DBTerm body = term(d.premises.at(0));
        if (flavor_ == Flavor::Upsilon2) {
          auto ctx = memo_.of(*d.term);
          if (ctx && ctx_member(d.term->name(), *ctx)) return DBTerm::bold_lam(std::move(body));
        }
        return DBTerm::lam(std::move(body));
      }
      case Rule::R6: return DBTerm::comp(sub(d.premises.at(0)), term(d.premises.at(1)));
      default: break;
    }
    throw std::invalid_argument("not a term derivation");
  }

  DBSub sub(const Derivation& d) {
    switch (d.rule) {
      case Rule::R7: return DBSub::slash(term(d.premises.at(0)));
      case Rule::R8: return DBSub::shift();
      case Rule::R9: return DBSub::id();
      case Rule::R10: return DBSub::lift(sub(d.premises.at(0)));
      default: break;
    }
    throw std::invalid_argument("not a substitution derivation");
  }

 private:
  Flavor flavor_;
  FvMemo memo_;
};

}  // namespace

DBTerm translate(const Derivation& d, Flavor flavor) {
  Translator t(flavor);
  return t.term(d);
}

DBSub translate_sub(const Derivation& d, Flavor flavor) {
  Translator t(flavor);
  return t.sub(d);
}

DBTerm translate_term(const Context& ctx, const Term& a, Flavor flavor) { return translate(derive(ctx, a), flavor); }

bool equiv_gamma(const Term& a, const Term& b, const Context& ctx, std::string* why) {
  auto side = [&](const Term& t, const char* which) -> std::optional<DBTerm> {
    try {
      return translate_term(ctx, t, Flavor::UpsilonPrime);
    } catch (const NotDerivable& e) {
      if (why) *why = std::string(which) + " side is not derivable: " + e.reason();
      return std::nullopt;
    }
  };
  auto ta = side(a, "left");
  if (!ta) return false;
  auto tb = side(b, "right");
  if (!tb) return false;
  return *ta == *tb;
}

bool equiv_alpha(const Term& a, const Term& b, std::string* why) {
  auto fa = fv_fast(a);
  auto fb = fv_fast(b);
  if (!fa || !fb || !fa->is_set() || !fb->is_set() || !is_good(a) || !is_good(b)) {
    if (why) *why = "both terms must be good";
    return false;
  }
  Context g = *fa;
  g.global.insert(fb->global.begin(), fb->global.end());
  return equiv_gamma(a, b, g, why);
}

// ---- printing ---------------------------------------------------------------

namespace {

class DBPrinter {
 public:
  explicit DBPrinter(Notation n) : n_(n) {}

  void term(const DBTerm& t) {
    switch (t.kind()) {
      case DBKind::Name: out += t.name(); return;
      case DBKind::One: out += '1'; return;
      case DBKind::App:
        app_side(t.left(), false);
        out += ' ';
        app_side(t.right(), true);
        return;
      case DBKind::Lam:
      case DBKind::BoldLam:
        out += t.kind() == DBKind::Lam ? "\\" : "\\!";
        term(t.body());
        return;
      case DBKind::Comp:
        if (n_ == Notation::Bracket) {
          const DBTerm a = t.body();
          const bool atomic = a.kind() == DBKind::Name || a.kind() == DBKind::One || a.kind() == DBKind::Comp;
          if (!atomic) out += '(';
          term(a);
          if (!atomic) out += ')';
          out += '[';
          sub(t.sub());
          out += ']';
        } else {
          sub(t.sub());
          out += " * ";
          term(t.body());
        }
        return;
    }
  }

  void sub(const DBSub& s) {
    const bool br = n_ == Notation::Bracket;
    switch (s.kind()) {
      case DBSubKind::Slash:
        if (!br) out += '[';
        term(s.term());
        out += '/';
        if (!br) out += ']';
        return;
      case DBSubKind::Shift: out += br ? "shift" : "W"; return;
      case DBSubKind::Id: out += "id"; return;
      case DBSubKind::Lift:
        out += "lift(";
        sub(s.inner());
        out += ')';
        return;
    }
  }

  std::string out;

 private:
  void app_side(const DBTerm& t, bool right) {
    bool paren = false;
    switch (t.kind()) {
      case DBKind::App: paren = right; break;
      case DBKind::Lam:
      case DBKind::BoldLam: paren = true; break;
      case DBKind::Comp: paren = n_ == Notation::Compose; break;
      default: break;
    }
    if (paren) out += '(';
    term(t);
    if (paren) out += ')';
  }

  Notation n_;
};

void print_l(std::string& out, const Labelled& t) {
  switch (t->sym) {
    case LSym::Name: out += t->name; return;
    case LSym::One: out += '1'; return;
    case LSym::Shift: out += 'W'; return;
    case LSym::Id: out += "id"; return;
    case LSym::App: out += "app"; break;
    case LSym::Lam: out += "lam"; break;
    case LSym::BoldLam: out += "blam" + std::to_string(t->label); break;
    case LSym::Comp: out += "o" + std::to_string(t->label); break;
    case LSym::Slash: out += "slash"; break;
    case LSym::Lift: out += "lift"; break;
  }
  out += '(';
  for (std::size_t i = 0; i < t->args.size(); ++i) {
    if (i) out += ", ";
    print_l(out, t->args[i]);
  }
  out += ')';
}

}  // namespace

std::string print_db(const DBTerm& a, Notation notation) {
  DBPrinter p(notation);
  p.term(a);
  return p.out;
}

std::string print_db_sub(const DBSub& s, Notation notation) {
  DBPrinter p(notation);
  p.sub(s);
  return p.out;
}

std::string print_labelled(const Labelled& t) {
  std::string out;
  print_l(out, t);
  return out;
}

}  // namespace lalpha
