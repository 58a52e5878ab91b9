#pragma once

// σ-normal forms (variables and W-blocks closed under application and
// abstraction) and the embedding of good normal forms into pure λ-terms.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lalpha/term.hpp"

namespace lalpha {

/// W x1 * ... * W xn * W z * z, stored as spine = [x1, ..., xn, z] and core = z.
struct Block {
  std::vector<Var> spine;
  Var core;
  friend bool operator==(const Block&, const Block&) = default;
};

std::optional<Block> as_block(const Term& t);

/// Matches the σ-normal-form grammar.
bool is_sigma_nf(const Term& a);

/// A term with no Comp nodes.
class PureTerm {
 public:
  static std::optional<PureTerm> from(const Term& t);
  const Term& term() const { return t_; }
  friend bool operator==(const PureTerm&, const PureTerm&) = default;

 private:
  explicit PureTerm(Term t) : t_(std::move(t)) {}
  Term t_;
};

class ContainsBlock : public std::runtime_error {
 public:
  ContainsBlock(Path path, Term offending);
  const Path& path() const { return path_; }
  const Term& offending() const { return offending_; }

 private:
  Path path_;
  Term offending_;
};

/// Identity embedding for good σ∪{α}-normal forms. Throws ContainsBlock when a Comp survives.
PureTerm to_pure(const Term& a);

}  // namespace lalpha
