/**
 * @file oracle.hpp
 * @brief Ground truth through binary codes: exhaustive evaluation of
 *        pseudomonomials and canonical forms computed from first principles.
 *
 * The oracle never touches the decomposition machinery. It enumerates all
 * 3^n pseudomonomials (each index absent, plain, or complemented), keeps the
 * ones vanishing on every codeword, and filters to the divisibility-minimal
 * survivors. Exhaustive enumeration caps the width at kOracleMaxN.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polycanon/monomial.hpp"

namespace polycanon {

/// Hard width cap for the 2^n / 3^n enumerations.
inline constexpr int kOracleMaxN = 16;

/**
 * A binary code: a set of length-n words. Word bit i-1 carries neuron i;
 * the word list is kept sorted and duplicate-free.
 */
struct NeuralCode {
    int n = 0;
    std::vector<Mask> words;

    friend bool operator==(const NeuralCode&, const NeuralCode&) = default;
};

/// Normalizing constructor: sorts, deduplicates, validates widths.
NeuralCode make_code(int n, std::vector<Mask> words);

/// f(v): 1 iff v_i = 1 for all i in sigma and v_i = 0 for all i in tau.
bool evaluate(const Pseudomonomial& f, Mask v);

/**
 * The code cut out by the ideal: all words on which every generator's
 * depolarization vanishes. Throws std::domain_error on Boolean-divisible
 * generators (they do not depolarize).
 */
NeuralCode code_of_ideal(const MonomialIdeal& a);

/**
 * Canonical form from first principles: the divisibility-minimal
 * pseudomonomials vanishing on the whole code, polarized and sorted.
 * The empty code is rejected (every pseudomonomial vanishes vacuously).
 */
MonomialIdeal oracle_canonical(const NeuralCode& c);

/**
 * The standard generating set of the code's neural ideal: one polarized
 * indicator pseudomonomial per non-codeword (x-support where the word has 1,
 * y-support where it has 0). code_of_ideal inverts it.
 */
MonomialIdeal ideal_of_code(const NeuralCode& c);

/**
 * Parse a code file: one binary word per line, leftmost character is
 * neuron 1; blank lines and '#' comments ignored; optional "n = <int>"
 * header, overridden by a nonzero n_override.
 */
NeuralCode parse_code(std::string_view text, int n_override = 0);

/// One word per line, sorted, leftmost character is neuron 1.
std::string format_code(const NeuralCode& c);

}  // namespace polycanon
