#pragma once

// Judgements Γ ⊢ A and Γ ⊢ S ▷ Δ. Derivations are unique, so the checker is
// syntax-directed: it never searches or backtracks.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lalpha/context.hpp"
#include "lalpha/term.hpp"

namespace lalpha {

enum class Rule : std::uint8_t { R1, R2, R3, R4, R5, R6, R7, R8, R9, R10 };

const char* rule_name(Rule r);

struct Derivation {
  Rule rule;
  Context input;
  /// Subject of a term judgement.
  std::optional<Term> term;
  /// Subject of a substitution judgement.
  std::optional<Subst> subst;
  /// Δ of Γ ⊢ S ▷ Δ; empty for term judgements.
  Context output;
  std::vector<Derivation> premises;

  bool is_subst() const { return subst.has_value(); }
  std::size_t node_count() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

class NotDerivable : public std::runtime_error {
 public:
  NotDerivable(Path path, std::string reason)
      : std::runtime_error(reason), path_(std::move(path)), reason_(std::move(reason)) {}
  const Path& path() const { return path_; }
  const std::string& reason() const { return reason_; }

 private:
  Path path_;
  std::string reason_;
};

class IllFormed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique derivation of Γ ⊢ A. Throws NotDerivable.
Derivation derive(const Context& ctx, const Term& a);

/// The unique derivation of Γ ⊢ S ▷ Δ together with Δ. Throws NotDerivable.
std::pair<Derivation, Context> derive_subst(const Context& ctx, const Subst& s);

/// Decides Γ ⊢ A without building the tree.
bool derivable(const Context& ctx, const Term& a);

/// Δ with Γ ⊢ S ▷ Δ, if derivable.
std::optional<Context> subst_output(const Context& ctx, const Subst& s);

/// FV(A) when A is well-formed (the least context deriving A). Throws IllFormed.
Context well_formed(const Term& a);
bool is_well_formed(const Term& a);

/// Derivable in some context with an empty local part.
bool is_good(const Term& a);

/// One judgement per line, premises indented below their conclusion.
std::string print_derivation(const Derivation& d);

}  // namespace lalpha
