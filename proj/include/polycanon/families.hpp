/**
 * @file families.hpp
 * @brief Generic canonical forms over placeholder variables and the
 *        closed-form families (chains, cycles, spreads).
 *
 * Placeholders z_1..z_k extend the ring; they never pair with an x/y index,
 * are never Boolean, and survive every reduction step, so a canonical form
 * computed over them specializes to the canonical form of any admissible
 * instantiation (one whose images introduce no shared index).
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polycanon/monomial.hpp"

namespace polycanon {

/// A squarefree monomial with an extra z-support over placeholders z_1..z_k.
struct ExtMonomial {
    SfMonomial base;
    Mask zs = 0;

    int degree() const { return base.degree() + popcount(zs); }
    friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;
};

bool ext_less(const ExtMonomial& a, const ExtMonomial& b);

struct ExtIdeal {
    int n = 0;
    int k = 0;  ///< number of placeholder variables
    std::vector<ExtMonomial> gens;
};

/// Width/support validation; n + k must fit the build-time variable cap.
void check_ext_ideal(const ExtIdeal& a);

/**
 * Canonical form over the extended ring: decomposition, dropping primes
 * containing an {x_i, y_i} pair, intersection and reduction, with the
 * placeholders treated as plain unpaired variables. With k = 0 this agrees
 * with canonical_full.
 */
ExtIdeal generic_canonical(const ExtIdeal& a);

/// Images of z_1..z_k, in order.
struct Substitution {
    std::vector<SfMonomial> images;
};

/**
 * Apply z_j -> images[j-1] to each generator with lcm normalization, then
 * Boolean-strip and divisor-reduce. Invalid substitutions (an image sharing
 * an index with the combined base+image supports) throw std::domain_error
 * naming the offending z_j and index.
 */
MonomialIdeal substitute(const ExtIdeal& generic, const Substitution& sub);

/**
 * Expand a generic almost canonical form along repeated placeholders:
 * group j lists the concrete monomials g_{j,1..t_j} substituted for z_j,
 * with the last element as the representative. For each generator f and
 * each dummy set D inside the z-support of f, every choice of non-
 * representative indices over D contributes the lcm of f's base, the chosen
 * dummies, and the representatives of the remaining z's. Equals
 * almost_canonical of the expanded concrete ideal.
 */
MonomialIdeal expand_repeats(const ExtIdeal& generic,
                             const std::vector<std::vector<SfMonomial>>& groups);

/**
 * Chain family on indices 1..k-1:
 *   (x1 g1, x2 y1 g2, ..., x_{k-1} y_{k-2} g_{k-1}, y_{k-1} gk).
 * gs must avoid the chain indices, be Boolean-free and pairwise share no
 * index. chain_canonical returns the closed form
 *   x_m y_j [g_{j+1}..g_m]  for 0 <= j < m <= k (x_k and y_0 read as 1),
 * divisor-reduced; k(k+1)/2 generators in generic position.
 */
MonomialIdeal chain_ideal(int k, const std::vector<SfMonomial>& gs);
MonomialIdeal chain_canonical(int k, const std::vector<SfMonomial>& gs);

/**
 * Cycle family on indices 1..k, k >= 3:
 *   (x1 y_k g1, x2 y1 g2, ..., x_k y_{k-1} gk).
 * cycle_canonical returns the k(k-1) generators
 *   x_{j+m} y_j [g_{j+1}..g_{j+m}]  (indices cyclic, 1 <= m <= k-1).
 */
MonomialIdeal cycle_ideal(int k, const std::vector<SfMonomial>& gs);
MonomialIdeal cycle_canonical(int k, const std::vector<SfMonomial>& gs);

/**
 * Spread family: one generator carrying x_1..x_k and a partition of the
 * same indices into y-groups, singletons first in spirit though any order
 * is accepted:
 *   (x1..xk g, Y_{S_1} g_1, ..., Y_{S_m} g_m).
 * flipped swaps the structural x/y roles. Only singleton groups recompose;
 * spread_canonical returns, for every subset T of the singleton groups,
 *   (prod_{i not in T} x_i) [g prod_{j in T} g_j]
 * plus the y-group generators, divisor-reduced.
 */
struct SpreadShape {
    int k = 0;
    std::vector<std::vector<int>> groups;  ///< partition of 1..k
    bool flipped = false;
};

MonomialIdeal spread_ideal(const SpreadShape& shape, const SfMonomial& g,
                           const std::vector<SfMonomial>& gs);
MonomialIdeal spread_canonical(const SpreadShape& shape, const SfMonomial& g,
                               const std::vector<SfMonomial>& gs);

/// Parse/format for the z-extended grammar (factor := ("x"|"y"|"z") DIGIT+).
ExtMonomial parse_ext_monomial(std::string_view text, int n, int k, int line = 1);
std::string format_ext_monomial(const ExtMonomial& m);

/**
 * Parse an extended ideal file (same layout as ideal files). Nonzero
 * overrides win; otherwise n and k default to the maximum indices seen.
 */
ExtIdeal parse_ext_ideal(std::string_view text, int n_override = 0,
                         int k_override = 0);

}  // namespace polycanon
