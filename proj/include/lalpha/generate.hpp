#pragma once

// Random well-formed instances. λα terms are grown top-down along a
// derivation, so Γ ⊢ A holds by construction.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

#include "lalpha/context.hpp"
#include "lalpha/debruijn.hpp"
#include "lalpha/term.hpp"

namespace lalpha {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

struct GenConfig {
  std::uint64_t seed = 0;
  /// Upper bound on Term::size().
  std::size_t max_size = 40;
  /// Names are drawn from the first pool_size of x, y, z, w, v, u, t, s.
  std::size_t pool_size = 4;
  std::size_t max_global = 3;
  std::size_t max_local = 3;
  /// Force an empty local part, so that the generated terms are good.
  bool set_context = false;
  // Relative weights of the term rules (var, app, lam, comp) and the
  // substitution rules (slash, weak, rename, lift).
  unsigned w_var = 3, w_app = 3, w_lam = 3, w_comp = 4;
  unsigned w_slash = 3, w_weak = 3, w_rename = 2, w_lift = 3;
};

struct Generated {
  Context context;
  Term term;
};

Context gen_context(const GenConfig& cfg, Rng& rng);
Generated gen_wellformed(const GenConfig& cfg, Rng& rng);
Generated gen_wellformed(const GenConfig& cfg);

struct TypedConfig {
  std::size_t max_size = 40;
  std::size_t max_local = 2;
  /// Allow explicit substitutions; without them the result is a pure λ-term.
  bool substitutions = true;
};

/// Erasure of a simply-typed term. Globals c : o, f : o→o, g : o→o→o are
/// always in scope and never rebound; binders come from x, y, z, w.
Generated gen_typed(const TypedConfig& cfg, Rng& rng);

/// n ⊢ a by construction. `bold` allows λ̲.
DBTerm gen_db_term(std::size_t arity, std::size_t budget, Rng& rng, bool bold = false);
/// n ⊢ s ▷ m by construction; returns (s, m). Needs budget ≥ 2 when arity is 0.
std::pair<DBSub, std::size_t> gen_db_sub(std::size_t arity, std::size_t budget, Rng& rng, bool bold = false);

}  // namespace lalpha
