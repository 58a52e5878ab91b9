#pragma once

#include <optional>
#include <unordered_map>

#include "lalpha/context.hpp"
#include "lalpha/term.hpp"

namespace lalpha {

/// FV(A) as a context, or nullopt when undefined. Follows the seven defining
/// equations literally: the substitution cases rebuild a term and recurse.
std::optional<Context> fv(const Term& a);

/// Bottom-up FV with results cached per node. FV(S∘A) is computed from FV(A)
/// and the parts of S without rebuilding terms; agrees with fv() everywhere.
/// Nodes are keyed by identity, so the memo must not outlive the terms it saw.
class FvMemo {
 public:
  std::optional<Context> of(const Term& a);
  std::optional<Context> of_comp(const Subst& s, const std::optional<Context>& fv_a);

 private:
  std::unordered_map<const void*, std::optional<Context>> memo_;
};

/// Same value as fv(), via FvMemo.
std::optional<Context> fv_fast(const Term& a);

}  // namespace lalpha
