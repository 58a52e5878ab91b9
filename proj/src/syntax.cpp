#include "lalpha/syntax.hpp"

#include <vector>

namespace lalpha {

namespace {

enum class Tok { Ident, W, Lambda, Dot, LParen, RParen, LBracket, RBracket, Slash, LBrace, RBrace, Star, Caret, Comma, Semi, End };

const char* tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::W: return "'W'";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Slash: return "'/'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'W') {
      if (i + 1 < s.size() && ident_char(s[i + 1])) throw ParseError(i, "identifiers must start with a lowercase letter");
      out.push_back({Tok::W, i, "W"});
      ++i;
      continue;
    }
    // λ is CE BB, ∘ is E2 88 98 in UTF-8.
    if (s.substr(i, 2) == "\xCE\xBB") {
      out.push_back({Tok::Lambda, i, "\\"});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x88\x98") {
      out.push_back({Tok::Star, i, "*"});
      i += 3;
      continue;
    }
    Tok k;
    switch (c) {
      case '\\': k = Tok::Lambda; break;
      case '.': k = Tok::Dot; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '/': k = Tok::Slash; break;
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      default:
        throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Term whole_term() {
    Term t = term();
    finish();
    return t;
  }

  Subst whole_subst() {
    Subst s = subst();
    finish();
    return s;
  }

  Context whole_context() {
    Context ctx;
    if (peek() == Tok::End) return ctx;
    expect(Tok::LBrace, "to open the global set");
    if (peek() != Tok::RBrace) {
      ctx.global.insert(ident());
      while (accept(Tok::Comma)) ctx.global.insert(ident());
    }
    expect(Tok::RBrace, "to close the global set");
    if (accept(Tok::Semi) && peek() == Tok::Ident) {
      ctx.local.push_back(ident());
      while (accept(Tok::Comma)) ctx.local.push_back(ident());
    }
    finish();
    return ctx;
  }

 private:
  Tok peek() const { return toks_[pos_].kind; }
  const Token& cur() const { return toks_[pos_]; }

  bool accept(Tok k) {
    if (peek() != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = cur();
    if (t.kind == Tok::End) throw ParseError(t.pos, "unexpected end of input, expected " + what);
    throw ParseError(t.pos, std::string("unexpected ") + tok_text(t.kind) + ", expected " + what);
  }

  void expect(Tok k, const char* why) {
    if (!accept(k)) fail(std::string(tok_text(k)) + " " + why);
  }

  void finish() {
    if (peek() == Tok::RParen || peek() == Tok::RBracket || peek() == Tok::RBrace) {
      throw ParseError(cur().pos, std::string("unbalanced ") + tok_text(peek()));
    }
    if (peek() != Tok::End) fail("end of input");
  }

  Var ident() {
    if (peek() != Tok::Ident) fail("a variable name");
    return toks_[pos_++].text;
  }

  static bool starts_subst(Tok k) { return k == Tok::LBracket || k == Tok::W || k == Tok::LBrace; }
  static bool starts_atom(Tok k) { return k == Tok::Ident || k == Tok::LParen; }

  Term term() {
    if (starts_subst(peek())) {
      Subst s = subst();
      if (!accept(Tok::Star)) fail("'*' after substitution");
      return Term::comp(std::move(s), term());
    }
    return app();
  }

  Term app() {
    std::optional<Term> acc;
    while (starts_atom(peek())) {
      Term a = atom();
      acc = acc ? Term::app(*acc, a) : a;
    }
    if (peek() == Tok::Lambda) {
      Term l = lambda();
      return acc ? Term::app(*acc, l) : l;
    }
    if (!acc) fail("a term");
    return *acc;
  }

  Term atom() {
    if (peek() == Tok::Ident) return Term::var(ident());
    const std::size_t open = cur().pos;
    expect(Tok::LParen, "");
    Term t = term();
    if (peek() == Tok::End) throw ParseError(open, "unbalanced '(': missing ')'");
    expect(Tok::RParen, "to close '('");
    return t;
  }

  Term lambda() {
    expect(Tok::Lambda, "");
    std::vector<Var> binders{ident()};
    while (peek() == Tok::Ident || peek() == Tok::Lambda) {
      accept(Tok::Lambda);
      binders.push_back(ident());
    }
    if (!accept(Tok::Dot)) fail("'.' after lambda binder");
    Term body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(*it, body);
    return body;
  }

  Subst subst() {
    Subst s = base_subst();
    while (accept(Tok::Caret)) s = Subst::lift(s, ident());
    return s;
  }

  Subst base_subst() {
    if (accept(Tok::W)) return Subst::weak(ident());
    if (peek() == Tok::LBrace) {
      const std::size_t open = cur().pos;
      ++pos_;
      Var y = ident();
      Var x = ident();
      if (peek() == Tok::End) throw ParseError(open, "unbalanced '{': missing '}'");
      expect(Tok::RBrace, "to close renaming");
      return Subst::rename(std::move(y), std::move(x));
    }
    if (peek() == Tok::LBracket) {
      const std::size_t open = cur().pos;
      ++pos_;
      Term b = term();
      expect(Tok::Slash, "in [B/x]");
      Var x = ident();
      if (peek() == Tok::End) throw ParseError(open, "unbalanced '[': missing ']'");
      expect(Tok::RBracket, "to close substitution");
      return Subst::slash(std::move(b), std::move(x));
    }
    fail("a substitution");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// `trailing` is true when nothing follows the term inside its enclosing construct,
// which lets a lambda or composition in argument position go unparenthesized.
void emit_term(std::string& out, const Term& t);
void emit_subst(std::string& out, const Subst& s);

void emit_app_side(std::string& out, const Term& t, bool is_left, bool trailing) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::App:
      if (is_left) {
        emit_app_side(out, t.left(), true, false);
        out += ' ';
        emit_app_side(out, t.right(), false, false);
        return;
      }
      break;
    case TermKind::Lam:
      if (!is_left && trailing) {
        emit_term(out, t);
        return;
      }
      break;
    case TermKind::Comp:
      break;
  }
  out += '(';
  emit_term(out, t);
  out += ')';
}

void emit_term(std::string& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::App:
      emit_app_side(out, t.left(), true, false);
      out += ' ';
      emit_app_side(out, t.right(), false, true);
      return;
    case TermKind::Lam:
      out += '\\';
      out += t.name();
      out += ". ";
      emit_term(out, t.body());
      return;
    case TermKind::Comp:
      emit_subst(out, t.subst());
      out += " * ";
      emit_term(out, t.body());
      return;
  }
}

void emit_subst(std::string& out, const Subst& s) {
  switch (s.kind()) {
    case SubstKind::Slash:
      out += '[';
      emit_term(out, s.term());
      out += '/';
      out += s.var();
      out += ']';
      return;
    case SubstKind::Weak:
      out += "W ";
      out += s.var();
      return;
    case SubstKind::Rename:
      out += '{';
      out += s.new_var();
      out += ' ';
      out += s.var();
      out += '}';
      return;
    case SubstKind::Lift:
      emit_subst(out, s.inner());
      out += '^';
      out += s.var();
      return;
  }
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).whole_term(); }
Subst parse_subst(std::string_view text) { return Parser(text).whole_subst(); }
Context parse_context(std::string_view text) { return Parser(text).whole_context(); }

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!ident_char(c)) return false;
  }
  return true;
}

std::string print_term(const Term& t) {
  std::string out;
  emit_term(out, t);
  return out;
}

std::string print_subst(const Subst& s) {
  std::string out;
  emit_subst(out, s);
  return out;
}

std::string print_context(const Context& ctx) {
  std::string out = "{";
  bool first = true;
  for (const Var& x : ctx.global) {
    if (!first) out += ',';
    out += x;
    first = false;
  }
  out += '}';
  if (!ctx.local.empty()) {
    out += "; ";
    for (std::size_t i = 0; i < ctx.local.size(); ++i) {
      if (i) out += ',';
      out += ctx.local[i];
    }
  }
  return out;
}

}  // namespace lalpha
