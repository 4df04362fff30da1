#include "polycanon/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "polycanon/kernels.hpp"

namespace polycanon {

namespace {

using Gen = std::pair<Mask, Mask>;     // (x-support, y-support)
using PrimeBits = std::pair<Mask, Mask>;  // (x-variables, y-variables)

int gen_degree(const Gen& g) { return popcount(g.first) + popcount(g.second); }

bool gen_divides(const Gen& a, const Gen& b) {
    return (a.first & ~b.first) == 0 && (a.second & ~b.second) == 0;
}

/// Dedupe, drop multiples of another generator, sort. Ideal-preserving.
std::vector<Gen> normalize(std::vector<Gen> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Gen> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            redundant = i != j && gen_divides(gens[j], gens[i]);
        if (!redundant) kept.push_back(gens[i]);
    }
    return kept;
}

/// Remove primes containing another prime; dedupe.
std::vector<PrimeBits> minimalize_primes(std::vector<PrimeBits> ps) {
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<PrimeBits> kept;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < ps.size() && !redundant; ++j)
            redundant = i != j && (ps[j].first & ~ps[i].first) == 0 &&
                        (ps[j].second & ~ps[i].second) == 0;
        if (!redundant) kept.push_back(ps[i]);
    }
    return kept;
}

struct Splitter {
    std::map<std::vector<Gen>, std::vector<PrimeBits>> memo;

    std::vector<PrimeBits> run(std::vector<Gen> gens) {
        gens = normalize(std::move(gens));
        // a generator 1 makes the ideal the unit ideal: no primes contain it
        for (const Gen& g : gens)
            if (g.first == 0 && g.second == 0) return {};

        bool all_single = std::all_of(gens.begin(), gens.end(), [](const Gen& g) {
            return gen_degree(g) == 1;
        });
        if (all_single) {
            PrimeBits p{0, 0};
            for (const Gen& g : gens) {
                p.first |= g.first;
                p.second |= g.second;
            }
            return {p};
        }

        if (auto it = memo.find(gens); it != memo.end()) return it->second;

        // branch on the first generator of maximal degree, splitting off its
        // lowest-index variable (x before y at the same index)
        std::size_t pick = 0;
        for (std::size_t i = 1; i < gens.size(); ++i)
            if (gen_degree(gens[i]) > gen_degree(gens[pick])) pick = i;
        const Gen g = gens[pick];
        Mask all = g.first | g.second;
        Mask low = all & (~all + 1);
        Gen var = (g.first & low) ? Gen{low, 0} : Gen{0, low};
        Gen rest{g.first & ~var.first, g.second & ~var.second};

        std::vector<Gen> a = gens, b = gens;
        a[pick] = var;
        b[pick] = rest;
        std::vector<PrimeBits> ps = run(std::move(a));
        std::vector<PrimeBits> qs = run(std::move(b));
        ps.insert(ps.end(), qs.begin(), qs.end());
        ps = minimalize_primes(std::move(ps));
        memo.emplace(std::move(gens), ps);
        return ps;
    }
};

std::vector<Gen> gens_of(const MonomialIdeal& a) {
    std::vector<Gen> gens;
    gens.reserve(a.gens.size());
    for (const SfMonomial& g : a.gens) gens.emplace_back(g.xs, g.ys);
    return gens;
}

std::vector<MonomialPrime> to_primes(int n, const std::vector<PrimeBits>& ps) {
    std::vector<MonomialPrime> out;
    out.reserve(ps.size());
    for (const PrimeBits& p : ps) out.push_back({n, p.first, p.second});
    std::sort(out.begin(), out.end(), prime_less);
    return out;
}

void require_generators(const MonomialIdeal& a) {
    check_ideal(a);
    if (a.gens.empty())
        throw std::invalid_argument("decomposition needs at least one generator");
}

void find_covers(const std::vector<Gen>& gens, Mask cx, Mask cy,
                 std::set<PrimeBits>& out) {
    for (const Gen& g : gens) {
        if ((g.first & cx) || (g.second & cy)) continue;
        // branch on every variable of the first uncovered generator
        for (Mask m = g.first; m;) {
            Mask low = m & (~m + 1);
            find_covers(gens, cx | low, cy, out);
            m &= m - 1;
        }
        for (Mask m = g.second; m;) {
            Mask low = m & (~m + 1);
            find_covers(gens, cx, cy | low, out);
            m &= m - 1;
        }
        return;
    }
    out.insert({cx, cy});
}

}  // namespace

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& a) {
    require_generators(a);
    Splitter s;
    return to_primes(a.n, s.run(gens_of(a)));
}

std::vector<MonomialPrime> minimal_primes_transversal(const MonomialIdeal& a) {
    require_generators(a);
    for (const SfMonomial& g : a.gens)
        if (g.is_one()) return {};
    std::set<PrimeBits> covers;
    find_covers(gens_of(a), 0, 0, covers);
    std::vector<PrimeBits> ps(covers.begin(), covers.end());
    return to_primes(a.n, minimalize_primes(std::move(ps)));
}

namespace {

/// Divisibility-minimal elements of a candidate list (SoA accept scan).
std::vector<Gen> minimal_elements(std::vector<Gen> cands) {
    std::sort(cands.begin(), cands.end(), [](const Gen& a, const Gen& b) {
        return gen_degree(a) != gen_degree(b) ? gen_degree(a) < gen_degree(b)
                                              : a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Gen> kept;
    std::vector<std::uint64_t> kx, ky;
    for (const Gen& c : cands) {
        // any strict divisor of c has smaller degree, hence was seen first;
        // if it was itself dropped, a kept divisor of it divides c too
        if (!kernels::any_strict_divisor(kx.data(), ky.data(), kx.size(),
                                         c.first, c.second)) {
            kept.push_back(c);
            kx.push_back(c.first);
            ky.push_back(c.second);
        }
    }
    return kept;
}

}  // namespace

MonomialIdeal intersect_primes(int n, const std::vector<MonomialPrime>& ps) {
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("ambient width n out of range");
    for (const MonomialPrime& p : ps)
        if (p.n != n)
            throw std::invalid_argument("prime width does not match ambient n");

    std::vector<Gen> frontier{{0, 0}};
    for (const MonomialPrime& p : ps) {
        std::vector<Gen> cands;
        cands.reserve(frontier.size() * static_cast<std::size_t>(p.var_count()));
        for (const Gen& m : frontier) {
            for (Mask v = p.xvars; v;) {
                Mask low = v & (~v + 1);
                cands.emplace_back(m.first | low, m.second);
                v &= v - 1;
            }
            for (Mask v = p.yvars; v;) {
                Mask low = v & (~v + 1);
                cands.emplace_back(m.first, m.second | low);
                v &= v - 1;
            }
        }
        frontier = minimal_elements(std::move(cands));
    }

    MonomialIdeal out{n, {}};
    out.gens.reserve(frontier.size());
    for (const Gen& g : frontier) out.gens.push_back(SfMonomial(n, g.first, g.second));
    std::sort(out.gens.begin(), out.gens.end(), canonical_less);
    return out;
}

std::vector<MonomialPrime> drop_boolean_primes(std::vector<MonomialPrime> ps,
                                               Mask indices) {
    std::erase_if(ps, [indices](const MonomialPrime& p) {
        return (p.pair_mask() & indices) != 0;
    });
    return ps;
}

}  // namespace polycanon
