/**
 * @file monomial.hpp
 * @brief Squarefree monomials over F2[x1..xn, y1..yn], pseudomonomials, and
 *        the basic arithmetic on them (divisibility, lcm, shared indices,
 *        polarization).
 *
 * Index sets are stored as bitmask words, one word for the x-support and one
 * for the y-support; index i occupies bit i-1. The ambient width n is capped
 * at kMaxVars.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycanon {

using Mask = std::uint64_t;

inline constexpr int kMaxVars = 64;

constexpr Mask index_bit(int i) { return Mask{1} << (i - 1); }

constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

int popcount(Mask m);

/// Lowest 1-based index present in m; 0 when m is empty.
int lowest_index(Mask m);

/// Ascending list of 1-based indices present in m.
std::vector<int> mask_indices(Mask m);

/**
 * Strict total order on index sets, used as a tie-break after degree.
 * Sets are compared by their lowest differing index; the set containing it
 * comes first. In particular a set precedes every proper superset's sibling
 * and x-heavy monomials sort before y-heavy ones of the same degree.
 */
bool mask_set_less(Mask a, Mask b);

/**
 * A squarefree monomial prod_{i in X} x_i * prod_{i in Y} y_i.
 * X and Y may overlap; a monomial with x_i*y_i as a divisor is called
 * Boolean-divisible. The constant monomial 1 has empty supports.
 */
struct SfMonomial {
    int n = 0;
    Mask xs = 0;
    Mask ys = 0;

    SfMonomial() = default;
    SfMonomial(int n_, Mask xs_, Mask ys_);

    int degree() const { return popcount(xs) + popcount(ys); }
    bool is_one() const { return xs == 0 && ys == 0; }
    /// Indices i with x_i*y_i dividing this monomial.
    Mask boolean_part() const { return xs & ys; }

    friend bool operator==(const SfMonomial&, const SfMonomial&) = default;
};

/// Least common multiple (support union). Throws on width mismatch.
SfMonomial lcm_sf(const SfMonomial& a, const SfMonomial& b);

/// Whether a divides b (support containment). Throws on width mismatch.
bool divides(const SfMonomial& a, const SfMonomial& b);

/**
 * Indices i such that x_i divides one argument and y_i divides the other.
 * An x_i*y_i divisor inside a single argument does not count.
 */
Mask shared_indices(const SfMonomial& a, const SfMonomial& b);

/// Ordering by (total degree, x-support, y-support); see mask_set_less.
bool canonical_less(const SfMonomial& a, const SfMonomial& b);

/**
 * A pseudomonomial prod_{i in sigma} x_i * prod_{i in tau} (1 - x_i) over
 * F2[x1..xn], with sigma and tau disjoint (enforced).
 */
struct Pseudomonomial {
    int n = 0;
    Mask sigma = 0;
    Mask tau = 0;

    Pseudomonomial() = default;
    Pseudomonomial(int n_, Mask sigma_, Mask tau_);

    friend bool operator==(const Pseudomonomial&, const Pseudomonomial&) = default;
};

/// x_i stays x_i, each factor (1 - x_i) becomes y_i.
SfMonomial polarize(const Pseudomonomial& f);

/**
 * y_i becomes (1 - x_i). Throws std::domain_error naming the offending index
 * if the input is Boolean-divisible (x_i * (1 - x_i) is not a pseudomonomial).
 */
Pseudomonomial depolarize(const SfMonomial& m);

/**
 * An ideal presented by an ordered generator list. Generator order is
 * preserved by construction; operations that return canonical output sort it.
 */
struct MonomialIdeal {
    int n = 0;
    std::vector<SfMonomial> gens;
};

/// Throws std::invalid_argument on width mismatch or n out of [1, kMaxVars].
void check_ideal(const MonomialIdeal& a);

/// Generator lists compared as sets (sorted, deduplicated).
bool same_generator_set(const MonomialIdeal& a, const MonomialIdeal& b);

/// Sorted, deduplicated copy of the generator list.
std::vector<SfMonomial> sorted_generator_set(const MonomialIdeal& a);

/**
 * A monomial prime, i.e. an ideal generated by a set of variables.
 * Stored as the x-variable and y-variable membership masks; a prime may
 * contain both x_i and y_i.
 */
struct MonomialPrime {
    int n = 0;
    Mask xvars = 0;
    Mask yvars = 0;

    int var_count() const { return popcount(xvars) + popcount(yvars); }
    /// Indices i with both x_i and y_i in the prime.
    Mask pair_mask() const { return xvars & yvars; }
    bool contains(const MonomialPrime& other) const {
        return (other.xvars & ~xvars) == 0 && (other.yvars & ~yvars) == 0;
    }

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

/// Ordering by (variable count, x-variables, y-variables).
bool prime_less(const MonomialPrime& a, const MonomialPrime& b);

}  // namespace polycanon
