#include "lalpha/rewrite.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "json.hpp"
#include "lalpha/freevars.hpp"
#include "lalpha/syntax.hpp"
#include "lalpha/typing.hpp"

namespace lalpha {

namespace {

constexpr std::array<const char*, kRuleCount> kRuleNames = {
    "Beta",   "App",     "Lambda",   "Var",     "Shift",      "Shift'", "IdVar",
    "IdShift", "IdShift'", "LiftVar", "LiftShift", "LiftShift'", "W",      "Alpha"};

RuleSet all_rules() {
  RuleSet s;
  for (int i = 0; i < kRuleCount; ++i) s = s.with(static_cast<RuleId>(i));
  return s;
}

bool is_weak_over(const Term& t, const Var& x) {
  return t.is_comp() && t.subst().kind() == SubstKind::Weak && t.subst().var() == x;
}

}  // namespace

const char* rule_id_name(RuleId r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> parse_rule_id(std::string_view name) {
  for (int i = 0; i < kRuleCount; ++i) {
    if (name == kRuleNames[i]) return static_cast<RuleId>(i);
  }
  if (name == "α" || name == "alpha") return RuleId::Alpha;
  return std::nullopt;
}

RuleSet RuleSet::full() { return all_rules(); }
RuleSet RuleSet::sigma() { return all_rules().without(RuleId::Beta).without(RuleId::Alpha); }
RuleSet RuleSet::sigma_alpha() { return sigma().with(RuleId::Alpha); }
RuleSet RuleSet::sigma_beta() { return sigma().with(RuleId::Beta); }

std::optional<RuleSet> RuleSet::named(std::string_view name) {
  if (name == "sigma") return sigma();
  if (name == "sigma-alpha") return sigma_alpha();
  if (name == "sigma-beta") return sigma_beta();
  if (name == "full") return full();
  return std::nullopt;
}

std::optional<RuleId> match_root(const Term& t) {
  // Each candidate is tested on its own so that overlapping shapes would be caught.
  std::optional<RuleId> found;
  auto hit = [&](RuleId r) {
    if (found) throw std::logic_error(std::string("rules ") + rule_id_name(*found) + " and " + rule_id_name(r) + " overlap");
    found = r;
  };
  if (t.is_app() && t.left().is_lam()) hit(RuleId::Beta);
  if (!t.is_comp()) return found;

  const Subst s = t.subst();
  const Term body = t.body();
  if (body.is_app()) hit(RuleId::App);
  if (body.is_lam()) hit(RuleId::Lambda);
  const bool var = body.is_var();
  const bool same = var && body.name() == s.var();
  switch (s.kind()) {
    case SubstKind::Slash:
      if (same) hit(RuleId::Var);
      if (is_weak_over(body, s.var())) hit(RuleId::Shift);
      if (var && !same) hit(RuleId::ShiftP);
      break;
    case SubstKind::Rename:
      if (same) hit(RuleId::IdVar);
      if (is_weak_over(body, s.var())) hit(RuleId::IdShift);
      if (var && !same) hit(RuleId::IdShiftP);
      break;
    case SubstKind::Lift:
      if (same) hit(RuleId::LiftVar);
      if (is_weak_over(body, s.var())) hit(RuleId::LiftShift);
      if (var && !same) hit(RuleId::LiftShiftP);
      break;
    case SubstKind::Weak:
      if (var && !same) hit(RuleId::W);
      break;
  }
  return found;
}

namespace {

class RedexFinder {
 public:
  RedexFinder(const RuleSet& rules, bool alpha) : rules_(rules), alpha_(alpha) {}

  void term(const Term& t) {
    if (auto r = match_root(t); r && rules_.contains(*r)) out.push_back({path_, *r});
    if (alpha_ && t.is_lam()) {
      auto ctx = memo_.of(t);
      if (ctx && ctx_member(t.name(), *ctx)) out.push_back({path_, RuleId::Alpha});
    }
    switch (t.kind()) {
      case TermKind::Var:
        return;
      case TermKind::App:
        descend(Step::AppLeft, t.left());
        descend(Step::AppRight, t.right());
        return;
      case TermKind::Lam:
        descend(Step::LamBody, t.body());
        return;
      case TermKind::Comp:
        path_.push_back(Step::CompSubst);
        subst(t.subst());
        path_.pop_back();
        descend(Step::CompBody, t.body());
        return;
    }
  }

  std::vector<Redex> out;

 private:
  void descend(Step s, const Term& t) {
    path_.push_back(s);
    term(t);
    path_.pop_back();
  }

  void subst(const Subst& s) {
    if (s.kind() == SubstKind::Slash) {
      descend(Step::SlashBody, s.term());
    } else if (s.kind() == SubstKind::Lift) {
      path_.push_back(Step::LiftInner);
      subst(s.inner());
      path_.pop_back();
    }
  }

  const RuleSet& rules_;
  bool alpha_;
  FvMemo memo_;
  Path path_;
};

std::vector<Redex> redexes(const Term& a, const RuleSet& rules, bool known_well_formed) {
  const bool alpha = rules.contains(RuleId::Alpha) && (known_well_formed || is_well_formed(a));
  RedexFinder f(rules, alpha);
  f.term(a);
  return std::move(f.out);
}

Term contract(const Term& t, RuleId rule, std::optional<Var>& fresh) {
  if (rule == RuleId::Alpha) {
    if (!t.is_lam()) throw InvalidRedex("Alpha needs an abstraction");
    auto ctx = fv_fast(t);
    if (!ctx || !ctx_member(t.name(), *ctx)) {
      throw InvalidRedex("Alpha needs the binder " + t.name() + " to occur in FV(" + print_term(t) + ")");
    }
    Var y = fresh_var(*ctx, t.name());
    fresh = y;
    return Term::lam(y, Term::comp(Subst::rename(y, t.name()), t.body()));
  }
  if (match_root(t) != rule) {
    throw InvalidRedex(std::string(rule_id_name(rule)) + " does not match " + print_term(t));
  }
  if (rule == RuleId::Beta) return Term::comp(Subst::slash(t.right(), t.left().name()), t.left().body());

  const Subst s = t.subst();
  const Term body = t.body();
  switch (rule) {
    case RuleId::App:
      return Term::app(Term::comp(s, body.left()), Term::comp(s, body.right()));
    case RuleId::Lambda:
      return Term::lam(body.name(), Term::comp(Subst::lift(s, body.name()), body.body()));
    case RuleId::Var:
      return s.term();
    case RuleId::Shift:
      return body.body();
    case RuleId::ShiftP:
    case RuleId::LiftVar:
    case RuleId::W:
      return body;
    case RuleId::IdVar:
      return Term::var(s.new_var());
    case RuleId::IdShift:
      return Term::comp(Subst::weak(s.new_var()), body.body());
    case RuleId::IdShiftP:
      return Term::comp(Subst::weak(s.new_var()), body);
    case RuleId::LiftShift:
      return Term::comp(Subst::weak(s.var()), Term::comp(s.inner(), body.body()));
    case RuleId::LiftShiftP:
      return Term::comp(Subst::weak(s.var()), Term::comp(s.inner(), body));
    default:
      break;
  }
  throw InvalidRedex("unhandled rule");
}

std::optional<TraceStep> step_impl(const Term& a, const RuleSet& rules, const Strategy& strategy,
                                   bool known_well_formed) {
  auto chosen = choose(redexes(a, rules, known_well_formed), strategy);
  if (!chosen) return std::nullopt;
  Rewrite r = apply_rule(a, chosen->path, chosen->rule);
  return TraceStep{chosen->rule, std::move(chosen->path), std::move(r.fresh), std::move(r.term)};
}

}  // namespace

std::vector<Redex> find_redexes(const Term& a, const RuleSet& rules) { return redexes(a, rules, false); }

Var fresh_var(const Context& avoid, const Var& x) {
  auto ok = [&](const Var& v) { return v != x && !ctx_member(v, avoid); };
  for (const char* c : {"z", "y", "x", "w", "v", "u", "t", "s"}) {
    if (ok(c)) return c;
  }
  for (std::size_t i = 1;; ++i) {
    Var v = "a" + std::to_string(i);
    if (ok(v)) return v;
  }
}

Rewrite apply_rule(const Term& a, const Path& at, RuleId rule) {
  auto sub = term_at(a, at);
  if (!sub) throw InvalidRedex("path does not address a term");
  std::optional<Var> fresh;
  Term replaced = contract(*sub, rule, fresh);
  return {replace_at(a, at, replaced), std::move(fresh)};
}

std::optional<Strategy> Strategy::parse(std::string_view text) {
  if (text == "lo") return lo();
  if (text == "ri") return ri();
  if (text.starts_with("index:")) {
    std::string_view num = text.substr(6);
    std::size_t k = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || p != num.data() + num.size() || num.empty()) return std::nullopt;
    return indexed(k);
  }
  return std::nullopt;
}

std::optional<Redex> choose(const std::vector<Redex>& all, const Strategy& strategy) {
  if (all.empty()) return std::nullopt;
  if (strategy.kind == Strategy::Kind::Indexed) {
    if (strategy.index >= all.size()) return std::nullopt;
    return all[strategy.index];
  }
  // Alpha is a last resort: it is contracted only when nothing else is left.
  std::vector<Redex> redexes;
  for (const Redex& r : all) {
    if (r.rule != RuleId::Alpha) redexes.push_back(r);
  }
  if (redexes.empty()) redexes = all;
  switch (strategy.kind) {
    case Strategy::Kind::LeftmostOutermost:
    case Strategy::Kind::Indexed:
      return redexes.front();
    case Strategy::Kind::RightmostInnermost: {
      auto below = [&](const Redex& r) {
        return std::any_of(redexes.begin(), redexes.end(), [&](const Redex& o) {
          return o.path.size() > r.path.size() && std::equal(r.path.begin(), r.path.end(), o.path.begin());
        });
      };
      const Redex* best = nullptr;
      for (const Redex& r : redexes) {
        if (below(r)) continue;
        if (!best || best->path < r.path) best = &r;
      }
      return *best;
    }
  }
  return std::nullopt;
}

std::optional<TraceStep> step(const Term& a, const RuleSet& rules, const Strategy& strategy) {
  return step_impl(a, rules, strategy, false);
}

Normalized normalize(const Term& a, const RuleSet& rules, const Strategy& strategy, std::size_t fuel) {
  // Well-formedness survives every step, so it is checked once up front.
  const bool wf = rules.contains(RuleId::Alpha) && is_well_formed(a);
  const RuleSet effective = wf || !rules.contains(RuleId::Alpha) ? rules : rules.without(RuleId::Alpha);
  Normalized out{a, Trace{a, {}}, false};
  while (true) {
    auto s = step_impl(out.term, effective, strategy, wf);
    if (!s) return out;
    if (out.trace.steps.size() == fuel) {
      out.exhausted = true;
      return out;
    }
    out.term = s->result;
    out.trace.steps.push_back(std::move(*s));
  }
}

std::string trace_to_text(const Trace& trace) {
  std::string out = "# " + print_term(trace.initial) + "\n";
  for (const TraceStep& s : trace.steps) {
    out += rule_id_name(s.rule);
    out += "\t[";
    const auto idx = path_indices(s.at);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(idx[i]);
    }
    out += "]\t";
    out += s.fresh ? *s.fresh : "null";
    out += '\t';
    out += print_term(s.result);
    out += '\n';
  }
  return out;
}

std::string trace_to_json(const Trace& trace, int indent) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const TraceStep& s : trace.steps) {
    steps.push_back({{"ruleName", rule_id_name(s.rule)},
                     {"pathAsChildIndices", path_indices(s.at)},
                     {"freshVariableOrNull", s.fresh ? nlohmann::ordered_json(*s.fresh) : nlohmann::ordered_json(nullptr)},
                     {"printedTerm", print_term(s.result)}});
  }
  nlohmann::ordered_json doc = {{"initial", print_term(trace.initial)}, {"steps", std::move(steps)}};
  return doc.dump(indent);
}

}  // namespace lalpha
