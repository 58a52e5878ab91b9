#pragma once

// Abstract syntax of named terms with explicit substitutions.
//
//   A ::= x | A B | \x. A | S * A
//   S ::= [B/x] | W x | {y x} | S^x
//
// Terms and substitutions are immutable values backed by shared nodes, so
// copying is cheap and subterms may be shared between terms freely.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lalpha {

using Var = std::string;

enum class TermKind : std::uint8_t { Var, App, Lam, Comp };
enum class SubstKind : std::uint8_t { Slash, Weak, Rename, Lift };

namespace detail {
struct TermNode;
struct SubstNode;
}  // namespace detail

class Subst;

class Term {
 public:
  static Term var(Var name);
  static Term app(Term fn, Term arg);
  static Term lam(Var binder, Term body);
  static Term comp(Subst s, Term body);

  TermKind kind() const;
  bool is_var() const { return kind() == TermKind::Var; }
  bool is_app() const { return kind() == TermKind::App; }
  bool is_lam() const { return kind() == TermKind::Lam; }
  bool is_comp() const { return kind() == TermKind::Comp; }

  /// Variable name for Var, binder for Lam.
  const Var& name() const;
  Term left() const;
  Term right() const;
  /// Body of Lam or Comp.
  Term body() const;
  Subst subst() const;

  /// Number of term and substitution nodes.
  std::size_t size() const;
  std::size_t hash() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  friend class Subst;
  friend struct detail::TermNode;
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

class Subst {
 public:
  static Subst slash(Term b, Var x);
  static Subst weak(Var x);
  /// {y x}: renames the rightmost x to y. Stored as (new, old).
  static Subst rename(Var y, Var x);
  static Subst lift(Subst inner, Var x);

  SubstKind kind() const;
  /// x in [B/x], W x, {y x} and S^x.
  const Var& var() const;
  /// y in {y x}.
  const Var& new_var() const;
  /// B in [B/x].
  Term term() const;
  /// S in S^x.
  Subst inner() const;

  std::size_t size() const;
  std::size_t hash() const;

  friend bool operator==(const Subst& a, const Subst& b);

 private:
  friend class Term;
  friend struct detail::TermNode;
  friend struct detail::SubstNode;
  explicit Subst(std::shared_ptr<const detail::SubstNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::SubstNode> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Positions where the compatible closure allows rewriting.
enum class Step : std::uint8_t { AppLeft, AppRight, LamBody, CompSubst, CompBody, SlashBody, LiftInner };
using Path = std::vector<Step>;

/// Index of the step among the children of its node (0 or 1).
int child_index(Step step);
const char* step_name(Step step);
std::vector<int> path_indices(const Path& path);

/// The term at `path`, or nothing when the path does not address a term.
std::optional<Term> term_at(const Term& root, const Path& path);
/// Rebuilds `root` with the term at `path` replaced. Throws std::out_of_range on a bad path.
Term replace_at(const Term& root, const Path& path, const Term& replacement);

/// Pure lambda term: no Comp nodes anywhere.
bool is_pure(const Term& t);

}  // namespace lalpha
