#pragma once

// Concrete syntax.
//
//   term   ::= subst '*' term | app
//   app    ::= atom+ | atom* lambda
//   atom   ::= ident | '(' term ')'
//   lambda ::= '\' ident ('\'? ident)* '.' term
//   subst  ::= base ('^' ident)*
//   base   ::= '[' term '/' ident ']' | 'W' ident | '{' ident ident '}'
//
// Application is left-associative, '*' is right-associative and looser than
// application, and a lambda body extends as far right as possible. On input
// 'λ' and '∘' are accepted for '\' and '*'.
//
// Contexts are written `{x,z}; x,x,y`; the local part may be omitted.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lalpha/context.hpp"
#include "lalpha/term.hpp"

namespace lalpha {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Term parse_term(std::string_view text);
Subst parse_subst(std::string_view text);
Context parse_context(std::string_view text);

bool is_identifier(std::string_view name);

std::string print_term(const Term& t);
std::string print_subst(const Subst& s);
std::string print_context(const Context& ctx);

}  // namespace lalpha
