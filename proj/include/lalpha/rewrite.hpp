#pragma once

// Reduction in λα: redex search under the compatible closure, rule
// application, strategies and traced normalization.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lalpha/context.hpp"
#include "lalpha/term.hpp"

namespace lalpha {

enum class RuleId : std::uint8_t {
  Beta,
  App,
  Lambda,
  Var,
  Shift,
  ShiftP,
  IdVar,
  IdShift,
  IdShiftP,
  LiftVar,
  LiftShift,
  LiftShiftP,
  W,
  Alpha,
};

inline constexpr int kRuleCount = 14;

/// "Beta", "Shift'", "LiftShift'", "Alpha", ...
const char* rule_id_name(RuleId r);
std::optional<RuleId> parse_rule_id(std::string_view name);

class RuleSet {
 public:
  constexpr RuleSet() = default;
  static RuleSet sigma();
  static RuleSet sigma_alpha();
  static RuleSet sigma_beta();
  static RuleSet full();
  /// "sigma", "sigma-alpha", "sigma-beta" or "full".
  static std::optional<RuleSet> named(std::string_view name);

  bool contains(RuleId r) const { return (bits_ >> static_cast<int>(r)) & 1u; }
  RuleSet with(RuleId r) const {
    RuleSet s = *this;
    s.bits_ |= 1u << static_cast<int>(r);
    return s;
  }
  RuleSet without(RuleId r) const {
    RuleSet s = *this;
    s.bits_ &= ~(1u << static_cast<int>(r));
    return s;
  }
  friend bool operator==(RuleSet, RuleSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct Redex {
  Path path;
  RuleId rule;
  friend bool operator==(const Redex&, const Redex&) = default;
};

class InvalidRedex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rules whose left-hand side matches at the root of `t`, ignoring Alpha.
/// At most one rule matches any node; a second match throws std::logic_error.
std::optional<RuleId> match_root(const Term& t);

/// Every redex in preorder (outer before inner, left before right). Alpha is
/// offered only when the whole term is well-formed.
std::vector<Redex> find_redexes(const Term& a, const RuleSet& rules);

/// First variable of z, y, x, w, v, u, t, s, a1, a2, ... outside `avoid` and different from x.
Var fresh_var(const Context& avoid, const Var& x);

struct Rewrite {
  Term term;
  std::optional<Var> fresh;
};

/// Contracts the redex at `at`. Throws InvalidRedex when the rule does not apply there.
Rewrite apply_rule(const Term& a, const Path& at, RuleId rule);

struct Strategy {
  enum class Kind : std::uint8_t { LeftmostOutermost, RightmostInnermost, Indexed };
  Kind kind = Kind::LeftmostOutermost;
  std::size_t index = 0;

  static Strategy lo() { return {Kind::LeftmostOutermost, 0}; }
  static Strategy ri() { return {Kind::RightmostInnermost, 0}; }
  static Strategy indexed(std::size_t k) { return {Kind::Indexed, k}; }
  /// "lo", "ri" or "index:K".
  static std::optional<Strategy> parse(std::string_view text);
};

/// The redex the strategy would contract, if any. lo and ri pick Alpha only
/// when it is the sole kind of redex left; index:K counts over all redexes.
std::optional<Redex> choose(const std::vector<Redex>& redexes, const Strategy& strategy);

struct TraceStep {
  RuleId rule;
  Path at;
  std::optional<Var> fresh;
  Term result;
};

struct Trace {
  Term initial;
  std::vector<TraceStep> steps;
};

std::optional<TraceStep> step(const Term& a, const RuleSet& rules, const Strategy& strategy);

struct Normalized {
  Term term;
  Trace trace;
  bool exhausted;
};

/// Steps until no redex is left or `fuel` steps have been taken.
Normalized normalize(const Term& a, const RuleSet& rules, const Strategy& strategy, std::size_t fuel);

/// One tab-separated line per step: rule, path, fresh variable or null, term.
std::string trace_to_text(const Trace& trace);
/// {"initial": ..., "steps": [{"ruleName", "pathAsChildIndices", "freshVariableOrNull", "printedTerm"}]}
std::string trace_to_json(const Trace& trace, int indent = 2);

}  // namespace lalpha
