#pragma once

// Contexts: a global set of names paired with a local list that grows on the
// right and may repeat names. "Undefined" results are std::nullopt.

#include <optional>
#include <vector>

#include <boost/container/flat_set.hpp>

#include "lalpha/term.hpp"

namespace lalpha {

using VarSet = boost::container::flat_set<Var>;

struct Context {
  VarSet global;
  std::vector<Var> local;

  Context() = default;
  Context(VarSet g, std::vector<Var> l) : global(std::move(g)), local(std::move(l)) {}

  /// Γ,x
  Context pushed(Var x) const {
    Context c = *this;
    c.local.push_back(std::move(x));
    return c;
  }
  /// Γ without its rightmost local entry; local must be nonempty.
  Context popped() const {
    Context c = *this;
    c.local.pop_back();
    return c;
  }
  bool is_set() const { return local.empty(); }
  const Var* last() const { return local.empty() ? nullptr : &local.back(); }

  friend bool operator==(const Context&, const Context&) = default;
};

bool ctx_member(const Var& x, const Context& ctx);

/// G1,L1 <= G2,L2 iff L2 = L L1 for some L and every name of G1 is in G2 or in L.
bool ctx_le(const Context& a, const Context& b);

/// Compatible iff one local list is a suffix of the other.
bool ctx_compatible(const Context& a, const Context& b);

/// Least upper bound, or nullopt when the contexts are incompatible.
std::optional<Context> ctx_sup(const Context& a, const Context& b);

/// O_{λx}: drops a trailing local x, or removes x from a pure set; otherwise undefined.
std::optional<Context> o_lambda(const Var& x, const Context& ctx);

}  // namespace lalpha
