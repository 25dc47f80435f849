#pragma once

#include <string>
#include <vector>

#include "qiet/iet.hpp"

namespace qiet::cli {

/// Parsed transformation description: field discriminant, 0-based
/// permutation, exact lengths and left endpoint.
struct IetSpec {
    int d;
    std::vector<int> perm;
    std::vector<QuadNum> lengths;
    QuadNum left;
};

/// Evaluates one arithmetic expression over Q(sqrt(d)).
///
/// Grammar (whitespace-insensitive, with leading unary minus):
///   expression := '-'? term (('+'|'-') term)*
///   term       := factor (('*'|'/') factor)*
///   factor     := integer | 'sqrt' '(' integer ')' | '(' expression ')'
///
/// sqrt(e) with e != d raises DiscriminantMismatch; syntax errors carry
/// line/column positions offset by the given base.
QuadNum parse_expression(const std::string& text, int d, int base_line = 1, int base_col = 1);

/// Parses a transformation spec, either the line-based text form
///
///   d = 5
///   perm = 2 1
///   lengths = 1 - (3-sqrt(5))/2, (3-sqrt(5))/2
///   left = 0            # optional, defaults to 0
///
/// (with '#' comments) or, when the first character is '{', the JSON form
/// {"d": 5, "perm": [2,1], "lengths": [...], "left": ...} with expression
/// strings or plain integers as values.
IetSpec parse_spec(const std::string& text);

Iet build_iet(const IetSpec& spec);

}  // namespace qiet::cli
