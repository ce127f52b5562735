#pragma once

#include <cstddef>
#include <string_view>

#include "boundscope/poly.hpp"

namespace boundscope {

/// Largest total degree an expression may expand to.
inline constexpr std::uint32_t kMaxParsedDegree = 200;

/// Parses and fully expands a polynomial expression in the variables x1..xn.
///
/// Grammar (whitespace is ignored):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := atom ('^' uint)* | '-' factor
///     atom   := number | 'x' uint | '(' expr ')'
///
/// `^` binds tighter than unary minus, so -x1^2 is -(x1^2); a chain
/// a^2^3 is right associative. Division is only allowed by a constant, which
/// lets fractional coefficients such as 5^6/6 be written directly.
/// Implicit multiplication ("2x1") is rejected.
///
/// Throws ParseError with the byte offset of the offending character.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

}  // namespace boundscope
