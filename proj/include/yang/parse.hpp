#ifndef YANG_PARSE_HPP
#define YANG_PARSE_HPP

#include <optional>
#include <string_view>

#include "yang/poly.hpp"

namespace yang {

/// Parses the polynomial grammar: variables `h`, `t1`..`tN`, `q`, `z`, `c`,
/// `a`; integer or `p/q` coefficients; `+ - * ^` and parentheses.
///
/// When `max_t` is given, `tK` with K > max_t raises UnknownVariable.
/// Syntax errors raise ParseError with the offending byte offset.
Poly parse_poly(std::string_view text, std::optional<unsigned> max_t = std::nullopt);

}  // namespace yang

#endif
