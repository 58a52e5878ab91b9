#include "lalpha/context.hpp"

#include <algorithm>

namespace lalpha {

bool ctx_member(const Var& x, const Context& ctx) {
  return ctx.global.contains(x) || std::find(ctx.local.begin(), ctx.local.end(), x) != ctx.local.end();
}

namespace {

bool is_suffix(const std::vector<Var>& suffix, const std::vector<Var>& whole) {
  if (suffix.size() > whole.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), whole.rbegin());
}

}  // namespace

bool ctx_le(const Context& a, const Context& b) {
  if (!is_suffix(a.local, b.local)) return false;
  const auto prefix_end = b.local.end() - static_cast<std::ptrdiff_t>(a.local.size());
  for (const Var& x : a.global) {
    if (b.global.contains(x)) continue;
    if (std::find(b.local.begin(), prefix_end, x) == prefix_end) return false;
  }
  return true;
}

bool ctx_compatible(const Context& a, const Context& b) {
  return is_suffix(a.local, b.local) || is_suffix(b.local, a.local);
}

std::optional<Context> ctx_sup(const Context& a, const Context& b) {
  // Peel matching right ends; a pure set meeting a local tail x loses x.
  VarSet ga = a.global;
  VarSet gb = b.global;
  std::size_t ia = a.local.size();
  std::size_t ib = b.local.size();
  std::vector<Var> tail;
  while (ia > 0 || ib > 0) {
    if (ia > 0 && ib > 0) {
      if (a.local[ia - 1] != b.local[ib - 1]) return std::nullopt;
      tail.push_back(a.local[ia - 1]);
      --ia;
      --ib;
    } else if (ia > 0) {
      const Var& x = a.local[ia - 1];
      gb.erase(x);
      tail.push_back(x);
      --ia;
    } else {
      const Var& x = b.local[ib - 1];
      ga.erase(x);
      tail.push_back(x);
      --ib;
    }
  }
  Context out;
  out.global = std::move(ga);
  out.global.insert(gb.begin(), gb.end());
  out.local.assign(tail.rbegin(), tail.rend());
  return out;
}

std::optional<Context> o_lambda(const Var& x, const Context& ctx) {
  if (ctx.local.empty()) {
    Context out = ctx;
    out.global.erase(x);
    return out;
  }
  if (ctx.local.back() != x) return std::nullopt;
  return ctx.popped();
}

}  // namespace lalpha
