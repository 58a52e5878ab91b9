#include "lalpha/harness.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

#include "lalpha/debruijn.hpp"
#include "lalpha/freevars.hpp"
#include "lalpha/generate.hpp"
#include "lalpha/normalforms.hpp"
#include "lalpha/oracle.hpp"
#include "lalpha/rewrite.hpp"
#include "lalpha/syntax.hpp"
#include "lalpha/typing.hpp"

namespace lalpha {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr std::size_t kAlphaSearchDepth = 8;
constexpr std::size_t kAlphaSearchNodes = 20000;

enum class Outcome { Pass, Fail, Inconclusive };

// What one trial hands back to the driver.
struct Trial {
  Outcome outcome = Outcome::Pass;
  std::size_t checks = 0;
  std::string term;
  std::string context;
  std::string detail;
  std::string trace;

  void fail(std::string why) {
    if (outcome == Outcome::Fail) return;
    outcome = Outcome::Fail;
    detail = std::move(why);
  }
  bool failed() const { return outcome == Outcome::Fail; }
};

using TrialFn = std::function<Trial(const SuiteConfig&, std::size_t, Rng&)>;

Generated draw(const SuiteConfig& cfg, Rng& rng, bool set_context = false) {
  GenConfig g;
  g.max_size = cfg.size;
  g.set_context = set_context;
  return gen_wellformed(g, rng);
}

Trial about(const Generated& g) {
  Trial t;
  t.term = print_term(g.term);
  t.context = print_context(g.context);
  return t;
}

Trial about(std::size_t arity, const DBTerm& a) {
  Trial t;
  t.term = print_db(a);
  t.context = std::to_string(arity);
  return t;
}

std::string step_text(RuleId r, const Path& at, const Term& result) {
  std::ostringstream out;
  out << rule_id_name(r) << " at [";
  const auto ix = path_indices(at);
  for (std::size_t i = 0; i < ix.size(); ++i) out << (i ? "," : "") << ix[i];
  out << "] gives " << print_term(result);
  return out.str();
}

std::string db_step_text(const DBReduct& r) {
  std::ostringstream out;
  out << db_rule_name(r.redex.rule) << " at [";
  const auto ix = path_indices(r.redex.path);
  for (std::size_t i = 0; i < ix.size(); ++i) out << (i ? "," : "") << ix[i];
  out << "] gives " << print_db(r.result);
  return out.str();
}

// A random de Bruijn instance: either a raw generated term or the translation
// of a generated λα term, so both shapes get exercised.
std::pair<std::size_t, DBTerm> draw_db(const SuiteConfig& cfg, std::size_t index, Rng& rng, bool bold) {
  if (index % 2 == 0) {
    Generated g = draw(cfg, rng);
    return {g.context.local.size(), translate_term(g.context, g.term, bold ? Flavor::Upsilon2 : Flavor::UpsilonPrime)};
  }
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  const std::size_t budget = std::uniform_int_distribution<std::size_t>(1, cfg.size)(rng);
  return {n, gen_db_term(n, budget, rng, bold)};
}

// ---- λα suites ---------------------------------------------------------------

Trial subject_reduction(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const bool good = is_good(g.term);
  for (const Redex& r : find_redexes(g.term, RuleSet::full())) {
    const Term b = apply_rule(g.term, r.path, r.rule).term;
    ++t.checks;
    if (!derivable(g.context, b)) {
      t.fail("reduct not derivable in the context");
      t.trace = step_text(r.rule, r.path, b);
      return t;
    }
    if (good && !is_good(b)) {
      t.fail("reduct of a good term is not good");
      t.trace = step_text(r.rule, r.path, b);
      return t;
    }
  }
  const std::size_t n = g.context.local.size();
  const DBTerm a = translate_term(g.context, g.term);
  for (const DBReduct& r : db_reducts(a, DBSystem::LambdaUpsilon)) {
    ++t.checks;
    if (!db_check(n, r.result)) {
      t.fail("lambda-upsilon reduct fails the arity check");
      t.trace = print_db(a) + "\n" + db_step_text(r);
      return t;
    }
  }
  const DBTerm a2 = translate_term(g.context, g.term, Flavor::Upsilon2);
  for (const DBReduct& r : db_reducts(a2, DBSystem::Upsilon2)) {
    ++t.checks;
    if (!db_check(n, r.result)) {
      t.fail("upsilon2 reduct fails the arity check");
      t.trace = print_db(a2) + "\n" + db_step_text(r);
      return t;
    }
  }
  return t;
}

Trial fv_monotone(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const auto fa = fv(g.term);
  if (!fa) {
    t.fail("fv undefined on a derivable term");
    return t;
  }
  for (const Redex& r : find_redexes(g.term, RuleSet::full())) {
    const Term b = apply_rule(g.term, r.path, r.rule).term;
    ++t.checks;
    const auto fb = fv(b);
    if (!fb || !ctx_le(*fb, *fa)) {
      t.fail(fb ? "fv(B) = " + print_context(*fb) + " is not below fv(A) = " + print_context(*fa)
                : "fv undefined on the reduct");
      t.trace = step_text(r.rule, r.path, b);
      return t;
    }
  }
  return t;
}

// Σ ≥ Γ via the two generating steps of the order.
Context raise(Context ctx, Rng& rng) {
  static const std::vector<Var> pool = {"x", "y", "z", "w", "v"};
  const std::size_t steps = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < steps; ++i) {
    const Var& x = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (std::bernoulli_distribution(0.5)(rng)) {
      ctx.global.insert(x);
    } else {
      // G,L < (G−{x}),x,L
      ctx.global.erase(x);
      ctx.local.insert(ctx.local.begin(), x);
    }
  }
  return ctx;
}

Trial fv_least(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const auto f = fv(g.term);
  t.checks += 4;
  if (!f) {
    t.fail("fv undefined on a derivable term");
    return t;
  }
  if (!derivable(*f, g.term)) {
    t.fail("not derivable in fv = " + print_context(*f));
    return t;
  }
  if (!ctx_le(*f, g.context)) {
    t.fail("fv = " + print_context(*f) + " is not below the context");
    return t;
  }
  if (fv_fast(g.term) != f) {
    t.fail("memoized fv disagrees with the literal one");
    return t;
  }
  if (is_pure(g.term)) {
    ++t.checks;
    const auto classical = classical_fv(g.term);
    if (!f->local.empty() || !std::equal(f->global.begin(), f->global.end(), classical.begin(), classical.end())) {
      t.fail("fv of a pure term differs from its free-variable set");
      return t;
    }
  }
  for (int i = 0; i < 3; ++i) {
    const Context sigma = raise(g.context, rng);
    ++t.checks;
    if (!derivable(sigma, g.term)) {
      t.fail("not derivable in the larger context " + print_context(sigma));
      return t;
    }
  }
  return t;
}

Trial sigma_alpha_termination(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const Normalized n = normalize(g.term, RuleSet::sigma_alpha(), Strategy::lo(), cfg.fuel);
  t.checks += n.trace.steps.size();
  if (n.exhausted) {
    t.fail("fuel exhausted after " + std::to_string(n.trace.steps.size()) + " steps");
    return t;
  }
  if (!is_sigma_nf(n.term)) {
    t.fail("normal form " + print_term(n.term) + " does not match the sigma-nf grammar");
    t.trace = trace_to_text(n.trace);
    return t;
  }
  if (is_good(g.term)) {
    try {
      to_pure(n.term);
    } catch (const ContainsBlock& e) {
      t.fail("good normal form keeps a block: " + print_term(e.offending()));
      t.trace = trace_to_text(n.trace);
    }
  }
  return t;
}

Trial sigma_alpha_termination_good(const SuiteConfig& cfg, std::size_t index, Rng& rng) {
  // Every other trial starts from a good term so that purity is exercised often.
  if (index % 2 == 1) return sigma_alpha_termination(cfg, index, rng);
  GenConfig gc;
  gc.max_size = cfg.size;
  gc.set_context = true;
  Generated g = gen_wellformed(gc, rng);
  Trial t = about(g);
  const Normalized n = normalize(g.term, RuleSet::sigma_alpha(), Strategy::lo(), cfg.fuel);
  t.checks += n.trace.steps.size();
  if (n.exhausted) {
    t.fail("fuel exhausted after " + std::to_string(n.trace.steps.size()) + " steps");
    return t;
  }
  if (!is_sigma_nf(n.term)) {
    t.fail("normal form " + print_term(n.term) + " does not match the sigma-nf grammar");
    t.trace = trace_to_text(n.trace);
    return t;
  }
  try {
    to_pure(n.term);
  } catch (const ContainsBlock& e) {
    t.fail("good normal form keeps a block: " + print_term(e.offending()));
    t.trace = trace_to_text(n.trace);
  }
  return t;
}

Trial confluence(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  TypedConfig tc;
  tc.max_size = cfg.size;
  Generated g = gen_typed(tc, rng);
  Trial t = about(g);
  std::ostringstream trace;
  std::optional<Term> ends[2];
  for (int side = 0; side < 2; ++side) {
    Term a = g.term;
    trace << "# prefix " << side << "\n";
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 10)(rng);
    for (std::size_t i = 0; i < len; ++i) {
      const auto rs = find_redexes(a, RuleSet::full());
      if (rs.empty()) break;
      const Redex& r = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)];
      a = apply_rule(a, r.path, r.rule).term;
      trace << step_text(r.rule, r.path, a) << "\n";
    }
    const Normalized n = normalize(a, RuleSet::full(), Strategy::lo(), cfg.fuel);
    t.checks += n.trace.steps.size();
    if (n.exhausted) {
      t.outcome = Outcome::Inconclusive;
      t.detail = "fuel exhausted";
      return t;
    }
    trace << "normal form " << print_term(n.term) << "\n";
    ends[side] = n.term;
  }
  std::string why;
  if (!equiv_gamma(*ends[0], *ends[1], g.context, &why)) {
    t.fail("normal forms differ: " + print_term(*ends[0]) + " vs " + print_term(*ends[1]) +
           (why.empty() ? "" : " (" + why + ")"));
    t.trace = trace.str();
  }
  return t;
}

Trial translation_simulation(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const DBTerm a = translate_term(g.context, g.term);
  std::vector<DBReduct> next;
  bool computed = false;
  for (const Redex& r : find_redexes(g.term, RuleSet::sigma_beta())) {
    const Term b = apply_rule(g.term, r.path, r.rule).term;
    const DBTerm tb = translate_term(g.context, b);
    ++t.checks;
    if (r.rule == RuleId::W) {
      if (!(tb == a)) {
        t.fail("W step changes the translation to " + print_db(tb));
        t.trace = step_text(r.rule, r.path, b);
        return t;
      }
      continue;
    }
    if (!computed) {
      next = db_reducts(a, DBSystem::LambdaUpsilon);
      computed = true;
    }
    const bool hit = std::any_of(next.begin(), next.end(), [&](const DBReduct& d) { return d.result == tb; });
    if (!hit) {
      t.fail("translation " + print_db(tb) + " is not a one-step reduct of " + print_db(a));
      t.trace = step_text(r.rule, r.path, b);
      return t;
    }
  }
  return t;
}

Trial alpha_simulation(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const DBTerm a = translate_term(g.context, g.term, Flavor::Upsilon2);
  for (const Redex& r : find_redexes(g.term, RuleSet::sigma_alpha())) {
    const Term b = apply_rule(g.term, r.path, r.rule).term;
    const DBTerm target = translate_term(g.context, b, Flavor::Upsilon2);
    ++t.checks;
    std::unordered_set<DBTerm, DBTermHash> seen{a};
    std::vector<DBTerm> frontier{a};
    bool found = a == target;
    bool capped = false;
    for (std::size_t depth = 0; depth < kAlphaSearchDepth && !found && !frontier.empty(); ++depth) {
      std::vector<DBTerm> next;
      for (const DBTerm& c : frontier) {
        for (const DBReduct& d : db_reducts(c, DBSystem::Upsilon2)) {
          if (d.result == target) found = true;
          if (seen.size() >= kAlphaSearchNodes) {
            capped = true;
            continue;
          }
          if (seen.insert(d.result).second) next.push_back(d.result);
        }
        if (found) break;
      }
      frontier = std::move(next);
    }
    if (!found) {
      t.trace = step_text(r.rule, r.path, b);
      if (capped || !frontier.empty()) {
        t.outcome = Outcome::Inconclusive;
        t.detail = "target not reached within the search bound";
      } else {
        t.fail("target " + print_db(target) + " unreachable from " + print_db(a));
      }
      return t;
    }
  }
  return t;
}

Trial nf_grammar(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  Generated g = draw(cfg, rng);
  Trial t = about(g);
  const Normalized n = normalize(g.term, RuleSet::sigma(), Strategy::lo(), cfg.fuel);
  // The start, the last few terms of the trace and the normal form.
  std::vector<Term> probes{g.term, n.term};
  const auto& steps = n.trace.steps;
  for (std::size_t i = steps.size() > 3 ? steps.size() - 3 : 0; i < steps.size(); ++i) probes.push_back(steps[i].result);
  for (const Term& p : probes) {
    ++t.checks;
    const bool grammar = is_sigma_nf(p);
    const bool no_redex = find_redexes(p, RuleSet::sigma()).empty();
    if (grammar != no_redex) {
      t.fail(print_term(p) + (grammar ? " matches the grammar but has a sigma redex"
                                      : " has no sigma redex but does not match the grammar"));
      return t;
    }
  }
  return t;
}

Trial oracle_equivalence(const SuiteConfig& cfg, std::size_t, Rng& rng) {
  TypedConfig tc;
  tc.max_size = cfg.size;
  tc.max_local = 0;
  tc.substitutions = false;
  Generated g = gen_typed(tc, rng);
  Trial t = about(g);
  ++t.checks;
  const Normalized n = normalize(g.term, RuleSet::full(), Strategy::lo(), cfg.fuel);
  const auto classical = classical_normalize(g.term, cfg.fuel);
  if (n.exhausted || !classical) {
    t.outcome = Outcome::Inconclusive;
    t.detail = "fuel exhausted";
    return t;
  }
  try {
    const PureTerm p = to_pure(n.term);
    if (!classical_alpha_eq(p.term(), *classical)) {
      t.fail("got " + print_term(p.term()) + ", oracle says " + print_term(*classical));
      t.trace = trace_to_text(n.trace);
    }
  } catch (const ContainsBlock& e) {
    t.fail("normal form " + print_term(n.term) + " keeps a block");
    t.trace = trace_to_text(n.trace);
  }
  return t;
}

// ---- de Bruijn suites ----------------------------------------------------------

bool lex_decrease(const Weights12& a, const Weights12& b, bool shift_lift) {
  if (shift_lift) return b.w1 <= a.w1 && (b.w1 < a.w1 || b.w2 < a.w2);
  return b.w1 < a.w1;
}

Trial upsilon_weights(const SuiteConfig& cfg, std::size_t index, Rng& rng) {
  const auto [n, a] = draw_db(cfg, index, rng, false);
  Trial t = about(n, a);
  // Walk every reduct of the start term and then follow one random path down.
  DBTerm cur = a;
  for (std::size_t depth = 0; depth < 64; ++depth) {
    const auto rs = db_reducts(cur, DBSystem::Upsilon);
    if (rs.empty()) break;
    const Weights12 wa = weights12(cur);
    for (const DBReduct& r : rs) {
      ++t.checks;
      const Weights12 wb = weights12(r.result);
      if (!lex_decrease(wa, wb, r.redex.rule == DBRule::ShiftLift)) {
        t.fail("weights do not decrease: (" + wa.w1.str() + "," + wa.w2.str() + ") to (" + wb.w1.str() + "," +
               wb.w2.str() + ")");
        t.trace = print_db(cur) + "\n" + db_step_text(r);
        return t;
      }
    }
    cur = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)].result;
  }
  return t;
}

Trial lpo_decrease(const SuiteConfig& cfg, std::size_t index, Rng& rng) {
  const auto [n, a] = draw_db(cfg, index, rng, true);
  Trial t = about(n, a);
  DBTerm cur = a;
  for (std::size_t depth = 0; depth < 64; ++depth) {
    const auto rs = db_reducts(cur, DBSystem::Upsilon2);
    if (rs.empty()) break;
    const Labelled la = label(cur);
    for (const DBReduct& r : rs) {
      ++t.checks;
      const Labelled lb = label(r.result);
      if (!lpo_gt(la, lb)) {
        t.fail("no LPO decrease: " + print_labelled(la) + " to " + print_labelled(lb));
        t.trace = print_db(cur) + "\n" + db_step_text(r);
        return t;
      }
    }
    cur = rs[std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng)].result;
  }
  return t;
}

Trial upsilon_local_confluence(const SuiteConfig& cfg, std::size_t index, Rng& rng) {
  const auto [n, a] = draw_db(cfg, index, rng, false);
  Trial t = about(n, a);
  const DBTerm nf = db_normalize_upsilon(a);
  ++t.checks;
  if (db_check(n, a) && !db_free_of_slash_id_lift(nf)) {
    t.fail("normal form " + print_db(nf) + " keeps a slash, id or lift");
    return t;
  }
  for (const DBReduct& r : db_reducts(a, DBSystem::Upsilon)) {
    ++t.checks;
    const DBTerm other = db_normalize_upsilon(r.result);
    if (!(other == nf)) {
      t.fail("normal forms differ: " + print_db(nf) + " vs " + print_db(other));
      t.trace = db_step_text(r);
      return t;
    }
  }
  return t;
}

// ---- join lemmas -------------------------------------------------------------

std::size_t pick_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

// A substitution of the given arity, retried until its output arity is `out`
// when that is requested.
std::pair<DBSub, std::size_t> sub_from(std::size_t n, std::size_t budget, Rng& rng) {
  return gen_db_sub(n, std::max<std::size_t>(budget, n == 0 ? 2 : 1), rng);
}

Trial join_lemmas(const SuiteConfig& cfg, std::size_t index, Rng& rng) {
  const std::size_t third = std::max<std::size_t>(cfg.size / 3, 2);
  const DBSub up = DBSub::shift();
  const auto lift = [](DBSub s) { return DBSub::lift(std::move(s)); };
  const auto at = [](DBTerm a, DBSub s) { return DBTerm::comp(std::move(s), std::move(a)); };
  std::string shape;
  DBTerm lhs = DBTerm::one(), rhs = DBTerm::one(), shown = DBTerm::one();
  std::size_t arity = 0;
  switch (index % 5) {
    case 0: {
      shape = "lift-shift-slash";
      const std::size_t k = pick_size(rng, 1, 3);
      const DBTerm a = gen_db_term(k, pick_size(rng, 1, third), rng);
      const DBTerm b = gen_db_term(k - 1, pick_size(rng, 1, third), rng);
      lhs = at(at(a, lift(up)), lift(DBSub::slash(b)));
      rhs = a;
      arity = k;
      break;
    }
    case 1: {
      shape = "lift-shift-id";
      const std::size_t k = pick_size(rng, 1, 3);
      const DBTerm a = gen_db_term(k, pick_size(rng, 1, third), rng);
      lhs = at(at(a, lift(up)), lift(DBSub::id()));
      rhs = at(a, lift(up));
      arity = k + 1;
      break;
    }
    case 2: {
      shape = "lift-shift-lift";
      const std::size_t p = pick_size(rng, 0, 2);
      const auto [s, q] = sub_from(p, pick_size(rng, 1, third), rng);
      const DBTerm a = gen_db_term(q + 1, pick_size(rng, 1, third), rng);
      lhs = at(at(a, lift(up)), lift(lift(s)));
      rhs = at(at(a, lift(s)), lift(up));
      arity = p + 2;
      break;
    }
    case 3: {
      shape = "slash-under-s";
      const std::size_t p = pick_size(rng, 0, 2);
      const auto [s, q] = sub_from(p, pick_size(rng, 1, third), rng);
      const DBTerm b = gen_db_term(q, pick_size(rng, 1, third), rng);
      const DBTerm a = gen_db_term(q + 1, pick_size(rng, 1, third), rng);
      lhs = at(at(a, DBSub::slash(b)), s);
      rhs = at(at(a, lift(s)), DBSub::slash(at(b, s)));
      arity = p;
      break;
    }
    default: {
      shape = "id";
      const std::size_t k = pick_size(rng, 1, 3);
      const DBTerm a = gen_db_term(k, pick_size(rng, 1, cfg.size), rng);
      lhs = at(a, DBSub::id());
      rhs = a;
      arity = k;
      break;
    }
  }
  Trial t = about(arity, lhs);
  t.term = shape + ": " + print_db(lhs) + " vs " + print_db(rhs);
  ++t.checks;
  if (!db_check(arity, lhs) || !db_check(arity, rhs)) {
    t.fail("generated instance is not well formed");
    return t;
  }
  const DBTerm l = db_normalize_upsilon(lhs);
  const DBTerm r = db_normalize_upsilon(rhs);
  if (!(l == r)) t.fail("no common reduct: " + print_db(l) + " vs " + print_db(r));
  return t;
}

struct SuiteEntry {
  const char* name;
  TrialFn fn;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> r = {
      {"subject-reduction", subject_reduction},
      {"fv-monotone", fv_monotone},
      {"fv-least", fv_least},
      {"sigma-alpha-termination", sigma_alpha_termination_good},
      {"confluence", confluence},
      {"translation-simulation", translation_simulation},
      {"upsilon-weights", upsilon_weights},
      {"lpo-decrease", lpo_decrease},
      {"join-lemmas", join_lemmas},
      {"nf-grammar", nf_grammar},
      {"oracle-equivalence", oracle_equivalence},
      {"upsilon-local-confluence", upsilon_local_confluence},
      {"alpha-simulation", alpha_simulation},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

TrialReport run_suite(std::string_view name, const SuiteConfig& cfg) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const SuiteEntry& e) { return name == e.name; });
  if (it == r.end()) throw std::invalid_argument("unknown suite: " + std::string(name));
  TrialReport report;
  report.suite = it->name;
  report.seed = cfg.seed;
  for (std::size_t i = 0; i < cfg.count; ++i) {
    Rng rng = trial_rng(cfg.seed, i);
    Trial t;
    try {
      t = it->fn(cfg, i, rng);
    } catch (const std::exception& e) {
      t.fail(std::string("exception: ") + e.what());
    }
    ++report.trials;
    report.checks += t.checks;
    switch (t.outcome) {
      case Outcome::Pass:
        ++report.passes;
        break;
      case Outcome::Inconclusive:
        ++report.inconclusive;
        break;
      case Outcome::Fail:
        ++report.failed;
        if (report.failures.size() < kKeptFailures) {
          report.failures.push_back({i, t.term, t.context, t.detail, t.trace});
        }
        break;
    }
  }
  return report;
}

std::string TrialReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << "\n"
      << "seed " << seed << "\n"
      << "trials " << trials << "\n"
      << "passes " << passes << "\n"
      << "failures " << failed << "\n"
      << "inconclusive " << inconclusive << "\n"
      << "checks " << checks << "\n";
  for (const TrialFailure& f : failures) {
    out << "\n#" << f.index << " " << f.detail << "\n"
        << "  context " << f.context << "\n"
        << "  term    " << f.term << "\n";
    if (!f.trace.empty()) {
      std::istringstream lines(f.trace);
      for (std::string line; std::getline(lines, line);) out << "  | " << line << "\n";
    }
  }
  return out.str();
}

std::string TrialReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["trials"] = trials;
  j["passes"] = passes;
  j["failures"] = failed;
  j["inconclusive"] = inconclusive;
  j["checks"] = checks;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const TrialFailure& f : failures) {
    j["counterexamples"].push_back(
        {{"index", f.index}, {"context", f.context}, {"term", f.term}, {"detail", f.detail}, {"trace", f.trace}});
  }
  return j.dump(indent);
}

}  // namespace lalpha
