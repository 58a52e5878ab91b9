#pragma once

// de Bruijn side: λυ′ and υ″ terms (named free variables plus the index 1),
// their checking and rewriting, termination weights, labelled terms with a
// lexicographic path order, and the translation from λα derivations.
//
// a[s] is stored as comp(s, a), so one node type serves both notations.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lalpha/context.hpp"
#include "lalpha/term.hpp"
#include "lalpha/typing.hpp"

namespace lalpha {

enum class DBKind : std::uint8_t { Name, One, App, Lam, BoldLam, Comp };
enum class DBSubKind : std::uint8_t { Slash, Shift, Id, Lift };

namespace detail {
struct DBTermNode;
struct DBSubNode;
}  // namespace detail

class DBSub;

class DBTerm {
 public:
  static DBTerm name(Var x);
  static DBTerm one();
  static DBTerm app(DBTerm a, DBTerm b);
  static DBTerm lam(DBTerm a);
  static DBTerm bold_lam(DBTerm a);
  /// a[s]
  static DBTerm comp(DBSub s, DBTerm a);

  DBKind kind() const;
  const Var& name() const;
  DBTerm left() const;
  DBTerm right() const;
  /// Body of λ, λ̲ and a[s].
  DBTerm body() const;
  DBSub sub() const;

  std::size_t size() const;
  std::size_t hash() const;
  const void* identity() const { return node_.get(); }
  friend bool operator==(const DBTerm& a, const DBTerm& b);

 private:
  friend class DBSub;
  explicit DBTerm(std::shared_ptr<const detail::DBTermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::DBTermNode> node_;
};

class DBSub {
 public:
  /// b/
  static DBSub slash(DBTerm b);
  /// ↑, written W in compose notation
  static DBSub shift();
  static DBSub id();
  /// ⇑s
  static DBSub lift(DBSub s);

  DBSubKind kind() const;
  DBTerm term() const;
  DBSub inner() const;

  std::size_t size() const;
  std::size_t hash() const;
  friend bool operator==(const DBSub& a, const DBSub& b);

 private:
  friend class DBTerm;
  explicit DBSub(std::shared_ptr<const detail::DBSubNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::DBSubNode> node_;
};

struct DBTermHash {
  std::size_t operator()(const DBTerm& t) const { return t.hash(); }
};

/// Paths reuse Step: LamBody also enters λ̲, CompSubst/CompBody enter s and a of a[s].
std::optional<DBTerm> db_term_at(const DBTerm& root, const Path& path);
DBTerm db_replace_at(const DBTerm& root, const Path& path, const DBTerm& replacement);

// ---- checking ---------------------------------------------------------------

bool db_check(std::size_t n, const DBTerm& a);
/// m with n ⊢ s ▷ m.
std::optional<std::size_t> db_check_sub(std::size_t n, const DBSub& s);

// ---- rewriting --------------------------------------------------------------

enum class DBRule : std::uint8_t {
  Beta,
  App,
  Lambda,
  LambdaP,
  LambdaPP,
  LambdaPPP,
  Var,
  Shift,
  VarId,
  ShiftId,
  VarLift,
  ShiftLift,
  Alpha,
  Xi,
};

const char* db_rule_name(DBRule r);

/// UPSILON is υ′, LAMBDA_UPSILON adds Beta, UPSILON2 is υ″.
enum class DBSystem : std::uint8_t { Upsilon, LambdaUpsilon, Upsilon2 };

bool db_system_has(DBSystem sys, DBRule r);

struct DBRedex {
  Path path;
  DBRule rule;
  friend bool operator==(const DBRedex&, const DBRedex&) = default;
};

/// Rules of the system matching at the root, in declaration order.
std::vector<DBRule> db_match_root(const DBTerm& t, DBSystem sys);
/// Every redex, outer before inner and left before right.
std::vector<DBRedex> db_find_redexes(const DBTerm& a, DBSystem sys);
/// Throws InvalidRedex (from rewrite.hpp) when the rule does not apply there.
DBTerm db_apply(const DBTerm& a, const Path& at, DBRule rule);

struct DBReduct {
  DBRedex redex;
  DBTerm result;
};
std::vector<DBReduct> db_reducts(const DBTerm& a, DBSystem sys);

/// υ′ normal form. υ′ terminates on every term, so there is no fuel.
DBTerm db_normalize_upsilon(const DBTerm& a);

/// True when no b/, id or ⇑s occurs anywhere.
bool db_free_of_slash_id_lift(const DBTerm& a);

// ---- weights ----------------------------------------------------------------

using BigNat = boost::multiprecision::cpp_int;

struct Weights12 {
  BigNat w1;
  BigNat w2;
  friend bool operator==(const Weights12&, const Weights12&) = default;
};

Weights12 weights12(const DBTerm& a);
Weights12 weights12(const DBSub& s);

std::uint64_t weight(const DBTerm& a);
std::uint64_t weight(const DBSub& s);

// ---- labelled terms and LPO -------------------------------------------------

/// Function symbols of the labelled signature. Comp and BoldLam carry a label.
enum class LSym : std::uint8_t { Name, One, App, Lam, BoldLam, Comp, Slash, Shift, Id, Lift };

struct LNode;
using Labelled = std::shared_ptr<const LNode>;

struct LNode {
  LSym sym;
  std::uint64_t label = 0;
  Var name;
  std::vector<Labelled> args;
};

/// Every Comp and BoldLam node labelled with the weight of that node.
Labelled label(const DBTerm& a);
bool labelled_equal(const Labelled& a, const Labelled& b);

/// The precedence: ∘ᵢ > app, λ, ⇑, ∘ⱼ (i>j), λ̲ⱼ (j≤i); ⇑ > W; λ̲ᵢ > λ, id, λ̲ⱼ (j<i),
/// ∘ⱼ (j<i), closed under transitivity. Names, 1, slash are unrelated to everything.
bool prec_gt(LSym f, std::uint64_t i, LSym g, std::uint64_t j);

bool lpo_gt(const Labelled& s, const Labelled& t);

// ---- translation and equivalences -------------------------------------------

enum class Flavor : std::uint8_t { UpsilonPrime, Upsilon2 };

/// By recursion over a term derivation, one case per inference rule.
DBTerm translate(const Derivation& d, Flavor flavor = Flavor::UpsilonPrime);
DBSub translate_sub(const Derivation& d, Flavor flavor = Flavor::UpsilonPrime);
/// derive then translate; throws NotDerivable.
DBTerm translate_term(const Context& ctx, const Term& a, Flavor flavor = Flavor::UpsilonPrime);

/// A ≡_Γ B. Underivable inputs give false; `why` then says which side failed.
bool equiv_gamma(const Term& a, const Term& b, const Context& ctx, std::string* why = nullptr);
/// A ≡_α B for good terms, over the union of the two global FV sets.
bool equiv_alpha(const Term& a, const Term& b, std::string* why = nullptr);

// ---- printing ---------------------------------------------------------------

enum class Notation : std::uint8_t { Bracket, Compose };

/// ASCII. Bracket: `\x[shift]`, `1[b/]`, `a[id]`, `a[lift(s)]`, `\!` for λ̲.
/// Compose: `\W * x`, `[b/] * 1`, `id * a`, `lift(s) * a`.
std::string print_db(const DBTerm& a, Notation notation = Notation::Bracket);
std::string print_db_sub(const DBSub& s, Notation notation = Notation::Bracket);
std::string print_labelled(const Labelled& t);

}  // namespace lalpha
