#include "polycanon/canonicity.hpp"

#include <algorithm>

namespace polycanon {

CanonicityVerdict is_canonical(const MonomialIdeal& a) {
    check_ideal(a);
    CanonicityVerdict v;
    const auto& gens = a.gens;

    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].boolean_part()) {
            v.precondition = {PreconditionKind::BooleanGenerator,
                              static_cast<int>(i),
                              lowest_index(gens[i].boolean_part())};
            return v;
        }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (i != j && divides(gens[i], gens[j])) {
                v.precondition = {PreconditionKind::DivisorPair,
                                  static_cast<int>(i), static_cast<int>(j)};
                return v;
            }

    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Mask s = shared_indices(gens[i], gens[j]);
            if (popcount(s) != 1) continue;
            SfMonomial w(a.n, (gens[i].xs | gens[j].xs) & ~s,
                         (gens[i].ys | gens[j].ys) & ~s);
            bool covered = false;
            for (std::size_t k = 0; k < gens.size() && !covered; ++k)
                covered = k != i && k != j && divides(gens[k], w);
            if (!covered) {
                v.witness = {static_cast<int>(i), static_cast<int>(j),
                             lowest_index(s)};
                return v;
            }
        }
    v.canonical = true;
    return v;
}

TwoGenCase classify_two_gen(const MonomialIdeal& a) {
    check_ideal(a);
    if (a.gens.size() != 2)
        throw std::invalid_argument("classification needs exactly 2 generators, got " +
                                    std::to_string(a.gens.size()));
    const SfMonomial& g1 = a.gens[0];
    const SfMonomial& g2 = a.gens[1];
    if (g1.boolean_part() || g2.boolean_part())
        throw std::domain_error("generators must be Boolean-free");
    if (divides(g1, g2) || divides(g2, g1))
        throw std::domain_error("one generator divides the other");

    auto sorted = [&](std::vector<SfMonomial> gens) {
        std::sort(gens.begin(), gens.end(), canonical_less);
        return MonomialIdeal{a.n, std::move(gens)};
    };

    Mask s = shared_indices(g1, g2);
    int count = popcount(s);
    if (count == 0) return {TwoGenTag::NoShared, sorted({g1, g2})};
    if (count >= 2) {
        bool mixed = (g1.xs & g2.ys) && (g1.ys & g2.xs);
        return {mixed ? TwoGenTag::MultiSharedMixed
                      : TwoGenTag::MultiSharedSameSide,
                sorted({g1, g2})};
    }

    // exactly one shared index: orient so xg carries x_i and yg carries y_i
    const SfMonomial& xg = (g1.xs & s) ? g1 : g2;
    const SfMonomial& yg = (g1.xs & s) ? g2 : g1;
    SfMonomial h1(a.n, xg.xs & ~s, xg.ys);
    SfMonomial h2(a.n, yg.xs, yg.ys & ~s);
    SfMonomial quot = lcm_sf(h1, h2);
    if (h1 == h2) return {TwoGenTag::OneShared4d, sorted({h1})};
    if (quot == h2) return {TwoGenTag::OneShared4b, sorted({xg, h2})};
    if (quot == h1) return {TwoGenTag::OneShared4c, sorted({h1, yg})};
    return {TwoGenTag::OneShared4a, sorted({xg, yg, quot})};
}

}  // namespace polycanon
