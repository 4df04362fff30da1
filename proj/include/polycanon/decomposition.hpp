/**
 * @file decomposition.hpp
 * @brief Primary decomposition of squarefree monomial ideals and the
 *        intersection of monomial primes.
 *
 * A squarefree monomial ideal is the intersection of its minimal primes,
 * each generated by variables. minimal_primes computes them by recursive
 * generator splitting: (.., v*m, ..) = (.., v, ..) /\ (.., m, ..), memoized
 * on the normalized generator set. minimal_primes_transversal derives the
 * same set as the minimal transversals of the generator supports and exists
 * as an independent cross-check.
 */
#pragma once

#include <vector>

#include "polycanon/monomial.hpp"

namespace polycanon {

/**
 * Minimal primes over the ideal, sorted by prime_less.
 * The unit ideal yields the empty set of primes. Requires at least one
 * generator.
 */
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& a);

/// Same result via minimal-transversal enumeration; used to cross-check.
std::vector<MonomialPrime> minimal_primes_transversal(const MonomialIdeal& a);

/**
 * Generators of the intersection of the given primes: the divisibility-
 * minimal elements among the variable-wise lcm choices, built prime by
 * prime with divisor pruning of the running frontier. The empty list yields
 * the unit ideal (1). Output is sorted by canonical_less.
 */
MonomialIdeal intersect_primes(int n, const std::vector<MonomialPrime>& ps);

/// Drop primes containing a pair {x_i, y_i} for some index i in the mask.
std::vector<MonomialPrime> drop_boolean_primes(std::vector<MonomialPrime> ps,
                                               Mask indices);

}  // namespace polycanon
