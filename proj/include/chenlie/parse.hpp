#pragma once

// Text syntax for the library values.
//
//   letter  := [A-Za-z][0-9]*            "xy" is the word x*y, "a1a2" is a1*a2
//   poly    := ['+'|'-'] shuf (('+'|'-') shuf)*
//   shuf    := prod ('#' prod)*          '#' is the shuffle product
//   prod    := factor ('*'? factor)*     juxtaposition is concatenation
//   factor  := int ['/' int] | '{' scalar '}' | letter
//            | '[' poly ',' poly ']' | '(' poly ')'
//   scalar  := arithmetic in integers and identifiers with + - * / ^ ( )
//   lie     := letter | '[' lie ',' lie ']'
//   gw      := item+ ;  item := atom ['^-1'] ;
//   atom    := letter | '1' | '(' gw ',' gw ')' | '(' gw ')'
//
// Square brackets are Lie brackets, parentheses with a comma are group
// commutators (a,b) = a b a^-1 b^-1. Whitespace is ignored between tokens.
// Errors are ParseError with 1-based line and column.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chenlie/freegrp.hpp"
#include "chenlie/liealg.hpp"
#include "chenlie/ncpoly.hpp"

namespace chenlie {

// True for names matching [A-Za-z][0-9]*.
bool is_letter_name(std::string_view name);

// "x,y,z" -> Alphabet; every name must be a letter name.
Alphabet parse_alphabet(std::string_view text);

// Letters occurring in the texts outside {...}, sorted by alphabetic prefix
// and then numeric suffix (x < y < z, a2 < a10). Throws ParseError when no
// letter occurs.
Alphabet infer_alphabet(const std::vector<std::string_view>& texts);

Scalar parse_scalar(std::string_view text);
NcPoly parse_poly(std::string_view text, const Alphabet& alphabet);
LieTree parse_lie(std::string_view text, const Alphabet& alphabet);
GroupWord parse_group_word(std::string_view text, const Alphabet& alphabet);

using Expression = std::variant<NcPoly, LieTree, GroupWord>;

// Tries the bracket grammar, then the polynomial grammar, then the group-word
// grammar; on failure reports the error of the attempt that got furthest.
Expression parse_expression(std::string_view text, const Alphabet& alphabet);

// Inverse of parse_expression for the matching grammar.
std::string print(const Alphabet& alphabet, const Expression& e);

}  // namespace chenlie
