/**
 * @file parse.hpp
 * @brief Text format for monomials and ideal files.
 *
 * Monomial grammar:  monomial := "1" | factor (("*" | WS+) factor)*
 *                    factor   := ("x" | "y") DIGIT+
 * The factor form "(1-xK)" is accepted as a synonym for yK on input and is
 * the display form of y-factors in depolarized output. Parsers for the
 * z-extended grammar used by generic ideals live in families.hpp.
 *
 * Ideal files hold one generator per line; blank lines and '#' comments are
 * ignored; the first significant line may be "n = <int>", otherwise n is the
 * maximum index seen.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "polycanon/monomial.hpp"

namespace polycanon {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

/// Parse one monomial. Indices must lie in [1, n]. line seeds error positions.
SfMonomial parse_monomial(std::string_view text, int n, int line = 1);

/// "x1*x2*y3" with x-factors then y-factors, ascending; "1" for the constant.
std::string format_monomial(const SfMonomial& m);

/// Depolarized display: "x2*(1-x1)" with x-factors then (1-x) factors.
std::string format_depolarized(const Pseudomonomial& f);

/**
 * Parse an ideal file. n_override, when nonzero, wins over the file's
 * "n = <int>" header; with neither present n is the maximum index seen
 * (at least 1).
 */
MonomialIdeal parse_ideal(std::string_view text, int n_override = 0);

/// One generator per line, in list order.
std::string format_ideal(const MonomialIdeal& a);

namespace detail {

/// One parsed factor: axis in {'x','y','z'}, 1-based index, source column.
struct Factor {
    char axis;
    int index;
    int col;
};

/**
 * Tokenize a single monomial. allow_z admits z-factors;
 * allow_one_minus admits "(1-xK)" as a y-factor.
 */
std::vector<Factor> tokenize_monomial(std::string_view text, int line,
                                      bool allow_z, bool allow_one_minus = true);

/// Lines of an ideal/code file with comments stripped: (1-based line, text).
std::vector<std::pair<int, std::string>> significant_lines(std::string_view text);

/// Parse an "n = <int>" header line; returns 0 when the line is not one.
int parse_width_header(std::string_view line_text, int line);

}  // namespace detail

}  // namespace polycanon
