#pragma once

// Shared helpers for the unit tests and the acceptance runner: short
// constructors, small finite universes of contexts, and the brute-force
// closure of the generating steps of the context order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "lalpha/context.hpp"
#include "lalpha/debruijn.hpp"
#include "lalpha/syntax.hpp"
#include "lalpha/term.hpp"

namespace support {

using namespace lalpha;

inline Term T(const std::string& s) { return parse_term(s); }
inline Context C(const std::string& s) { return parse_context(s); }

inline DBTerm nm(const std::string& x) { return DBTerm::name(x); }
inline DBTerm one() { return DBTerm::one(); }
inline DBTerm lam(DBTerm a) { return DBTerm::lam(std::move(a)); }
inline DBTerm blam(DBTerm a) { return DBTerm::bold_lam(std::move(a)); }
inline DBTerm app(DBTerm a, DBTerm b) { return DBTerm::app(std::move(a), std::move(b)); }
/// a[s]
inline DBTerm at(DBTerm a, DBSub s) { return DBTerm::comp(std::move(s), std::move(a)); }
inline DBSub sl(DBTerm b) { return DBSub::slash(std::move(b)); }
inline DBSub up() { return DBSub::shift(); }
inline DBSub ids() { return DBSub::id(); }
inline DBSub lift(DBSub s) { return DBSub::lift(std::move(s)); }

/// Every context over `names` whose local part has length at most `max_local`.
inline std::vector<Context> universe(const std::vector<Var>& names, std::size_t max_local) {
  std::vector<Context> out;
  const std::size_t k = names.size();
  std::vector<std::vector<Var>> locals = {{}};
  for (std::size_t len = 1; len <= max_local; ++len) {
    std::vector<std::vector<Var>> next;
    for (const auto& l : locals) {
      if (l.size() + 1 != len) continue;
      for (const Var& v : names) {
        auto m = l;
        m.push_back(v);
        next.push_back(m);
      }
    }
    locals.insert(locals.end(), next.begin(), next.end());
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    VarSet g;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) g.insert(names[i]);
    }
    for (const auto& l : locals) out.emplace_back(g, l);
  }
  return out;
}

inline std::string key(const Context& c) { return print_context(c); }

/// Reflexive-transitive closure of G,L < G∪{x},L and G,L < (G−{x}),x,L,
/// restricted to local parts of length at most `max_local`. Returns, for each
/// context key, the set of keys above it.
inline std::map<std::string, std::set<std::string>> closure(const std::vector<Var>& names, std::size_t max_local) {
  std::map<std::string, std::set<std::string>> above;
  for (const Context& start : universe(names, max_local)) {
    std::set<std::string>& seen = above[key(start)];
    std::queue<Context> todo;
    todo.push(start);
    seen.insert(key(start));
    while (!todo.empty()) {
      const Context c = todo.front();
      todo.pop();
      for (const Var& x : names) {
        Context a = c;
        a.global.insert(x);
        if (seen.insert(key(a)).second) todo.push(a);
        if (c.local.size() < max_local) {
          Context b = c;
          b.global.erase(x);
          b.local.insert(b.local.begin(), x);
          if (seen.insert(key(b)).second) todo.push(b);
        }
      }
    }
  }
  return above;
}

}  // namespace support
