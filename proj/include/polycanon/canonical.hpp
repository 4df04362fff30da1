/**
 * @file canonical.hpp
 * @brief Canonical forms of polarized neural ideals.
 *
 * The canonical form of a polarized neural ideal is the unique generator set
 * consisting of the divisibility-minimal vanishing pseudomonomials of its
 * code. Two routes compute it:
 *
 *  - canonical_full: primary decomposition, dropping every minimal prime
 *    that contains a pair {x_i, y_i}, intersecting the remaining primes,
 *    then reducing. Deliberately routed through the decomposition module so
 *    it stays independent of the shortcut.
 *  - canonical_fast: the shared-index shortcut. Only indices i where some
 *    generator pair shares exactly the index i matter; each such index is
 *    expanded once, in ascending order, by appending lcm(g, h)/(x_i*y_i)
 *    for every pair (g, h) sharing only i, scanning the grown list. Later
 *    indices see generators added by earlier ones; earlier indices are not
 *    revisited.
 *
 * reduce is the cleanup both routes share: drop generators divisible by
 * some x_i*y_i, then duplicates, then generators strictly divisible by
 * another generator.
 */
#pragma once

#include <vector>

#include "polycanon/decomposition.hpp"
#include "polycanon/monomial.hpp"

namespace polycanon {

struct CanonicalResult {
    MonomialIdeal canonical;        ///< sorted by canonical_less
    bool was_already_canonical = false;
    Mask indices_processed = 0;     ///< indices expanded (fast) or all (full)
    std::vector<SfMonomial> added;  ///< output gens absent from the input
    std::vector<SfMonomial> removed;  ///< input gens absent from the output
};

/// Boolean-divisible gens, duplicates, then proper multiples are dropped.
/// Survivor order follows the input. Idempotent.
MonomialIdeal reduce(const MonomialIdeal& a);

/**
 * Intersection of the minimal primes of a that contain no pair {x_i, y_i}
 * with i in indices. Output sorted; generators divisible by x_i*y_i may
 * remain and are dealt with by reduce.
 */
MonomialIdeal recompose(const MonomialIdeal& a, Mask indices);

/// Full pipeline: reduce(recompose(a, all indices)). Unit ideal input throws.
CanonicalResult canonical_full(const MonomialIdeal& a);

/// Shared-index shortcut; agrees with canonical_full on every input.
CanonicalResult canonical_fast(const MonomialIdeal& a);

/**
 * The recomposed ideal before multiples are removed: the shortcut expansion
 * with no divisor reduction anywhere. reduce(almost_canonical(a)) equals the
 * canonical form.
 */
MonomialIdeal almost_canonical(const MonomialIdeal& a);

}  // namespace polycanon
