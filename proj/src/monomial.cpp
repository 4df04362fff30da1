#include "polycanon/monomial.hpp"

#include <algorithm>
#include <bit>

namespace polycanon {

int popcount(Mask m) { return std::popcount(m); }

int lowest_index(Mask m) { return m == 0 ? 0 : std::countr_zero(m) + 1; }

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

bool mask_set_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask d = a ^ b;
    return (d & (~d + 1) & a) != 0;
}

namespace {

void check_width(int n) {
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("ambient width n must lie in [1, " +
                                    std::to_string(kMaxVars) + "], got " +
                                    std::to_string(n));
}

void check_same_ring(int na, int nb) {
    if (na != nb)
        throw std::invalid_argument("incompatible ambient rings: n = " +
                                    std::to_string(na) + " vs n = " +
                                    std::to_string(nb));
}

}  // namespace

SfMonomial::SfMonomial(int n_, Mask xs_, Mask ys_) : n(n_), xs(xs_), ys(ys_) {
    check_width(n);
    if ((xs | ys) & ~full_mask(n))
        throw std::invalid_argument("monomial support exceeds ambient width n = " +
                                    std::to_string(n));
}

SfMonomial lcm_sf(const SfMonomial& a, const SfMonomial& b) {
    check_same_ring(a.n, b.n);
    return SfMonomial(a.n, a.xs | b.xs, a.ys | b.ys);
}

bool divides(const SfMonomial& a, const SfMonomial& b) {
    check_same_ring(a.n, b.n);
    return (a.xs & ~b.xs) == 0 && (a.ys & ~b.ys) == 0;
}

Mask shared_indices(const SfMonomial& a, const SfMonomial& b) {
    check_same_ring(a.n, b.n);
    return (a.xs & b.ys) | (a.ys & b.xs);
}

bool canonical_less(const SfMonomial& a, const SfMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.xs != b.xs) return mask_set_less(a.xs, b.xs);
    return mask_set_less(a.ys, b.ys);
}

Pseudomonomial::Pseudomonomial(int n_, Mask sigma_, Mask tau_)
    : n(n_), sigma(sigma_), tau(tau_) {
    check_width(n);
    if ((sigma | tau) & ~full_mask(n))
        throw std::invalid_argument("pseudomonomial support exceeds ambient width n = " +
                                    std::to_string(n));
    if (sigma & tau)
        throw std::invalid_argument(
            "pseudomonomial supports must be disjoint; index " +
            std::to_string(lowest_index(sigma & tau)) + " appears in both");
}

SfMonomial polarize(const Pseudomonomial& f) {
    return SfMonomial(f.n, f.sigma, f.tau);
}

Pseudomonomial depolarize(const SfMonomial& m) {
    if (m.boolean_part())
        throw std::domain_error(
            "cannot depolarize: divisible by x" +
            std::to_string(lowest_index(m.boolean_part())) + "*y" +
            std::to_string(lowest_index(m.boolean_part())));
    return Pseudomonomial(m.n, m.xs, m.ys);
}

void check_ideal(const MonomialIdeal& a) {
    check_width(a.n);
    for (const SfMonomial& g : a.gens) check_same_ring(a.n, g.n);
}

std::vector<SfMonomial> sorted_generator_set(const MonomialIdeal& a) {
    std::vector<SfMonomial> v = a.gens;
    std::sort(v.begin(), v.end(), canonical_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool same_generator_set(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n == b.n && sorted_generator_set(a) == sorted_generator_set(b);
}

bool prime_less(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.var_count() != b.var_count()) return a.var_count() < b.var_count();
    if (a.xvars != b.xvars) return mask_set_less(a.xvars, b.xvars);
    return mask_set_less(a.yvars, b.yvars);
}

}  // namespace polycanon
