/**
 * @file canonicity.hpp
 * @brief Deciding canonicity without recomposing, and the complete
 *        two-generator classification.
 *
 * For an ideal whose generators are Boolean-free and pairwise non-dividing,
 * the generator set fails to be canonical exactly when some pair (g, h)
 * shares exactly one index i and no other generator divides
 * lcm(g, h)/(x_i*y_i). is_canonical checks that criterion directly; inputs
 * violating the hypotheses get a precondition verdict instead of an error.
 */
#pragma once

#include <optional>

#include "polycanon/monomial.hpp"

namespace polycanon {

enum class PreconditionKind {
    BooleanGenerator,  ///< some generator is divisible by an x_i*y_i
    DivisorPair,       ///< some generator divides another (duplicates included)
};

struct CanonicityVerdict {
    /// Pair positions (0-based, input order) and the single shared index.
    struct Witness {
        int j1 = 0;
        int j2 = 0;
        int index = 0;
    };
    struct PreconditionFailure {
        PreconditionKind kind;
        int j1 = 0;  ///< offending generator position (the divisor, if a pair)
        int j2 = 0;  ///< multiple's position (DivisorPair) or Boolean index
    };

    bool canonical = false;
    std::optional<Witness> witness;              ///< first failing pair
    std::optional<PreconditionFailure> precondition;
};

CanonicityVerdict is_canonical(const MonomialIdeal& a);

enum class TwoGenTag {
    NoShared,              ///< no shared index; canonical as given
    MultiSharedSameSide,   ///< >= 2 shared indices, one orientation
    MultiSharedMixed,      ///< >= 2 shared indices, both orientations
    OneShared4a,           ///< lcm quotient is a new third generator
    OneShared4b,           ///< quotient equals the y-side cofactor
    OneShared4c,           ///< quotient equals the x-side cofactor
    OneShared4d,           ///< both cofactors coincide
};

struct TwoGenCase {
    TwoGenTag tag;
    MonomialIdeal canonical_form;  ///< sorted by canonical_less
};

/**
 * Classify a two-generator ideal and return its canonical form case-wise.
 * Throws std::invalid_argument unless there are exactly two generators and
 * std::domain_error on Boolean-divisible generators or a divisor pair.
 */
TwoGenCase classify_two_gen(const MonomialIdeal& a);

}  // namespace polycanon
