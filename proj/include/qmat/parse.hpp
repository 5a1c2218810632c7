#pragma once
// Expression front-end for elements of the supported algebras.
//
//   expr      := ["-"] term (("+"|"-") term)*
//   term      := factor ("*" factor)*
//   factor    := atom ("^" integer)?
//   atom      := rational | "q" | generator | "(" expr ")"
//   generator := "X[" nat "," nat "]" | "y[" nat "]" | "z[" nat "]"
//
// Exponents on generators and parenthesized expressions mean repeated
// multiplication and must be nonnegative; "^" on q and on rationals accepts
// negative integers. X generators are legal in quantum matrix algebras, y/z
// in tensor algebras, y in plain affine spaces.

#include "qmat/algebra.hpp"

#include <stdexcept>
#include <string>

namespace qmat {

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Parse and return the normal form. Total on grammatical input with in-range
// generator indices.
NCPoly parse_expression(const std::string& text, const AlgebraPtr& alg);

}  // namespace qmat
