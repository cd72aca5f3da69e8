#pragma once

#include "skein/scalar.hpp"

#include <stdexcept>
#include <string>

namespace skein {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammar accepted (and produced by Scalar::str):
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exp)?
//   exp    := ['-'] int | '(' ['-'] int ['/' int] ')'
//   atom   := int | s | q | z | a | a1 | a2 | xi | '(' expr ')'
// q means s^2 and z means s - s^-1; q^(1/2) is s.
Scalar parse_scalar(const std::string& text);

}  // namespace skein
