#pragma once

// Text syntax for monomials, tensors and chains.
//
//   monomial := 1 | 0 | p[i,..] q[i,..]? | q[i,..] | w[i,..] | w[]
//   tensor   := monomial ( "(x)" monomial )*
//   term     := sign? ( scalar "*" )? ( tensor | "(" tensor ")" )
//   chain    := term ( ("+" | "-") term )*
//   scalar   := int | int "/" int
//
// Whitespace is insignificant. Indices are >= 1.

#include "hoch/tensor.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace hoch {

std::string format_monomial(const CuntzMonomial &a);
std::string format_monomial(const FreeWord &w);
std::string format_tensor(const ElementaryTensor<CuntzMonomial> &x);
std::string format_tensor(const ElementaryTensor<FreeWord> &x);

/// Canonical text of a chain. Degree-0 terms are joined by "+"/"-" with unit
/// coefficients omitted ("1 - p[1]q[1]"); higher-degree terms are written
/// "c * (tensor)" joined by "+", with coefficient 1 omitted. The zero chain
/// is "0".
std::string format_chain(const Chain<CuntzMonomial> &x);
std::string format_chain(const Chain<FreeWord> &x);

inline std::string format_element(const Element<CuntzMonomial> &x) { return format_chain(as_chain(x)); }
inline std::string format_element(const Element<FreeWord> &x) { return format_chain(as_chain(x)); }

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string &what)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

enum class Basis { cuntz, free };

struct ParsedChain {
  std::variant<Chain<CuntzMonomial>, Chain<FreeWord>> chain;
  int degree;

  Basis basis() const noexcept { return chain.index() == 0 ? Basis::cuntz : Basis::free; }
};

/// Parses a homogeneous chain. Expressions using only `0` and `1` are read
/// in the Cuntz basis. Throws ParseError on syntax errors, mixed bases or
/// mixed degrees.
ParsedChain parse_chain(std::string_view text);

Chain<CuntzMonomial> parse_cuntz_chain(std::string_view text);
Chain<FreeWord> parse_free_chain(std::string_view text);

/// A single monomial, e.g. "p[1]q[2,3]".
CuntzMonomial parse_cuntz_monomial(std::string_view text);

} // namespace hoch
