#include "polycanon/canonical.hpp"

#include <algorithm>
#include <set>

#include "polycanon/kernels.hpp"

namespace polycanon {

namespace {

void check_not_unit(const MonomialIdeal& a) {
    for (const SfMonomial& g : a.gens)
        if (g.is_one())
            throw std::domain_error(
                "the unit ideal is not a polarized neural ideal");
}

std::vector<SfMonomial> strip_boolean(const std::vector<SfMonomial>& gens) {
    std::vector<SfMonomial> out;
    out.reserve(gens.size());
    for (const SfMonomial& g : gens)
        if (g.boolean_part() == 0) out.push_back(g);
    return out;
}

std::vector<SfMonomial> reduce_gens(const std::vector<SfMonomial>& gens) {
    std::vector<SfMonomial> kept;
    for (const SfMonomial& g : strip_boolean(gens))
        if (std::find(kept.begin(), kept.end(), g) == kept.end())
            kept.push_back(g);
    std::vector<std::uint64_t> kx, ky;
    kx.reserve(kept.size());
    ky.reserve(kept.size());
    for (const SfMonomial& g : kept) {
        kx.push_back(g.xs);
        ky.push_back(g.ys);
    }
    std::vector<SfMonomial> out;
    for (const SfMonomial& g : kept)
        if (!kernels::any_strict_divisor(kx.data(), ky.data(), kx.size(), g.xs,
                                         g.ys))
            out.push_back(g);
    return out;
}

/**
 * One expansion pass of the shortcut: for every index in ascending order at
 * which some generator pair shares exactly that index (determined up front),
 * append lcm(g, h)/(x_i*y_i) for each pair sharing only it. Pairs added for
 * index i never carry i, so scanning the growing list is stable; when
 * eager_reduce is set the list is reduced after each index.
 */
std::vector<SfMonomial> expand_shared(int n, std::vector<SfMonomial> gens,
                                      Mask& processed, bool eager_reduce) {
    processed = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Mask s = shared_indices(gens[i], gens[j]);
            if (popcount(s) == 1) processed |= s;
        }

    std::set<std::pair<Mask, Mask>> seen;
    for (const SfMonomial& g : gens) seen.insert({g.xs, g.ys});

    for (Mask rest = processed; rest;) {
        Mask bit = rest & (~rest + 1);
        rest &= rest - 1;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                if (shared_indices(gens[i], gens[j]) != bit) continue;
                SfMonomial w(n, (gens[i].xs | gens[j].xs) & ~bit,
                             (gens[i].ys | gens[j].ys) & ~bit);
                if (seen.insert({w.xs, w.ys}).second) gens.push_back(w);
            }
        if (eager_reduce) {
            gens = reduce_gens(gens);
            seen.clear();
            for (const SfMonomial& g : gens) seen.insert({g.xs, g.ys});
        }
    }
    return gens;
}

CanonicalResult finish(const MonomialIdeal& input, MonomialIdeal canonical,
                       Mask processed) {
    std::sort(canonical.gens.begin(), canonical.gens.end(), canonical_less);
    CanonicalResult r;
    r.canonical = std::move(canonical);
    r.indices_processed = processed;
    std::vector<SfMonomial> in = sorted_generator_set(input);
    const std::vector<SfMonomial>& out = r.canonical.gens;
    std::set_difference(out.begin(), out.end(), in.begin(), in.end(),
                        std::back_inserter(r.added), canonical_less);
    std::set_difference(in.begin(), in.end(), out.begin(), out.end(),
                        std::back_inserter(r.removed), canonical_less);
    r.was_already_canonical = r.added.empty() && r.removed.empty();
    return r;
}

}  // namespace

MonomialIdeal reduce(const MonomialIdeal& a) {
    check_ideal(a);
    return {a.n, reduce_gens(a.gens)};
}

MonomialIdeal recompose(const MonomialIdeal& a, Mask indices) {
    check_ideal(a);
    if (a.gens.empty()) return {a.n, {}};
    return intersect_primes(
        a.n, drop_boolean_primes(minimal_primes(a), indices));
}

CanonicalResult canonical_full(const MonomialIdeal& a) {
    check_ideal(a);
    check_not_unit(a);
    MonomialIdeal stripped{a.n, strip_boolean(a.gens)};
    MonomialIdeal out =
        stripped.gens.empty()
            ? MonomialIdeal{a.n, {}}
            : reduce(recompose(stripped, full_mask(a.n)));
    return finish(a, std::move(out), full_mask(a.n));
}

CanonicalResult canonical_fast(const MonomialIdeal& a) {
    check_ideal(a);
    check_not_unit(a);
    Mask processed = 0;
    std::vector<SfMonomial> gens = reduce_gens(a.gens);
    gens = expand_shared(a.n, std::move(gens), processed, /*eager_reduce=*/true);
    return finish(a, {a.n, reduce_gens(gens)}, processed);
}

MonomialIdeal almost_canonical(const MonomialIdeal& a) {
    check_ideal(a);
    check_not_unit(a);
    std::vector<SfMonomial> gens = strip_boolean(a.gens);
    std::vector<SfMonomial> unique;
    for (const SfMonomial& g : gens)
        if (std::find(unique.begin(), unique.end(), g) == unique.end())
            unique.push_back(g);
    Mask processed = 0;
    unique = expand_shared(a.n, std::move(unique), processed,
                           /*eager_reduce=*/false);
    MonomialIdeal out{a.n, std::move(unique)};
    std::sort(out.gens.begin(), out.gens.end(), canonical_less);
    return out;
}

}  // namespace polycanon
