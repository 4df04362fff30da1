#include "polycanon/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "polycanon/canonical.hpp"
#include "polycanon/parse.hpp"

namespace polycanon {

namespace {

// Placeholders embed as the plain variables x_{n+1}..x_{n+k}: they have no
// y-partner there, so decomposition and reduction treat them exactly as
// unpaired generic factors.
MonomialIdeal embed(const ExtIdeal& a) {
    MonomialIdeal out{a.n + a.k, {}};
    out.gens.reserve(a.gens.size());
    for (const ExtMonomial& g : a.gens)
        out.gens.push_back(
            SfMonomial(a.n + a.k, g.base.xs | (g.zs << a.n), g.base.ys));
    return out;
}

ExtMonomial unembed(const SfMonomial& m, int n, int k) {
    Mask low = full_mask(n);
    return ExtMonomial{SfMonomial(n, m.xs & low, m.ys & low),
                       (m.xs >> n) & full_mask(k)};
}

void check_gs_widths(const std::vector<SfMonomial>& gs, int n) {
    for (const SfMonomial& g : gs)
        if (g.n != n) throw std::invalid_argument("incompatible ambient rings");
}

/**
 * Shared preconditions of the closed-form families: the structural indices
 * are free in every g, and no index is shared between (or inside) the gs.
 */
void check_family_gs(Mask struct_mask, const SfMonomial* extra,
                     const std::vector<SfMonomial>& gs) {
    std::vector<const SfMonomial*> all;
    if (extra) all.push_back(extra);
    for (const SfMonomial& g : gs) all.push_back(&g);
    for (std::size_t i = 0; i < all.size(); ++i) {
        if ((all[i]->xs | all[i]->ys) & struct_mask)
            throw std::invalid_argument(
                "family monomials must avoid the structural indices (index " +
                std::to_string(lowest_index((all[i]->xs | all[i]->ys) &
                                            struct_mask)) +
                ")");
        if (all[i]->boolean_part())
            throw std::domain_error(
                "family monomial is Boolean-divisible at index " +
                std::to_string(lowest_index(all[i]->boolean_part())));
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            Mask s = shared_indices(*all[i], *all[j]);
            if (s)
                throw std::domain_error("family monomials share index " +
                                        std::to_string(lowest_index(s)));
        }
    }
}

MonomialIdeal finish_family(MonomialIdeal a) {
    a = reduce(a);
    std::sort(a.gens.begin(), a.gens.end(), canonical_less);
    a.gens.erase(std::unique(a.gens.begin(), a.gens.end()), a.gens.end());
    return a;
}

}  // namespace

bool ext_less(const ExtMonomial& a, const ExtMonomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.base.xs != b.base.xs) return mask_set_less(a.base.xs, b.base.xs);
    if (a.base.ys != b.base.ys) return mask_set_less(a.base.ys, b.base.ys);
    if (a.zs != b.zs) return mask_set_less(a.zs, b.zs);
    return false;
}

void check_ext_ideal(const ExtIdeal& a) {
    if (a.n < 1 || a.k < 0 || a.n + a.k > kMaxVars)
        throw std::invalid_argument("n + k must lie in [1, " +
                                    std::to_string(kMaxVars) + "]");
    for (const ExtMonomial& g : a.gens) {
        if (g.base.n != a.n)
            throw std::invalid_argument("incompatible ambient rings");
        if (g.zs & ~full_mask(a.k))
            throw std::invalid_argument(
                "placeholder index exceeds k = " + std::to_string(a.k));
    }
}

ExtIdeal generic_canonical(const ExtIdeal& a) {
    check_ext_ideal(a);
    CanonicalResult res = canonical_full(embed(a));
    ExtIdeal out{a.n, a.k, {}};
    out.gens.reserve(res.canonical.gens.size());
    for (const SfMonomial& m : res.canonical.gens)
        out.gens.push_back(unembed(m, a.n, a.k));
    std::sort(out.gens.begin(), out.gens.end(), ext_less);
    return out;
}

namespace {

/**
 * Shared-index validity of a set of images against the generic ideal: the
 * clash scan runs against the union of all base supports and all image
 * supports, so images are also checked against each other.
 */
void check_images(const ExtIdeal& generic,
                  const std::vector<SfMonomial>& images) {
    check_gs_widths(images, generic.n);
    Mask ux = 0, uy = 0;
    for (const ExtMonomial& g : generic.gens) {
        ux |= g.base.xs;
        uy |= g.base.ys;
    }
    for (const SfMonomial& img : images) {
        ux |= img.xs;
        uy |= img.ys;
    }
    for (std::size_t j = 0; j < images.size(); ++j) {
        Mask clash = (images[j].xs & uy) | (images[j].ys & ux);
        if (clash)
            throw std::domain_error(
                "invalid substitution: the image of z" + std::to_string(j + 1) +
                " shares index " + std::to_string(lowest_index(clash)));
    }
}

}  // namespace

MonomialIdeal substitute(const ExtIdeal& generic, const Substitution& sub) {
    check_ext_ideal(generic);
    if (static_cast<int>(sub.images.size()) != generic.k)
        throw std::invalid_argument(
            "expected " + std::to_string(generic.k) + " images, got " +
            std::to_string(sub.images.size()));
    check_images(generic, sub.images);

    MonomialIdeal out{generic.n, {}};
    out.gens.reserve(generic.gens.size());
    for (const ExtMonomial& g : generic.gens) {
        SfMonomial m = g.base;
        for (int j : mask_indices(g.zs)) m = lcm_sf(m, sub.images[j - 1]);
        out.gens.push_back(m);
    }
    return finish_family(std::move(out));
}

MonomialIdeal expand_repeats(const ExtIdeal& generic,
                             const std::vector<std::vector<SfMonomial>>& groups) {
    check_ext_ideal(generic);
    if (static_cast<int>(groups.size()) != generic.k)
        throw std::invalid_argument(
            "expected " + std::to_string(generic.k) + " groups, got " +
            std::to_string(groups.size()));
    std::vector<SfMonomial> flat;
    for (std::size_t j = 0; j < groups.size(); ++j) {
        if (groups[j].empty())
            throw std::invalid_argument("group for z" + std::to_string(j + 1) +
                                        " is empty");
        flat.insert(flat.end(), groups[j].begin(), groups[j].end());
    }
    check_images(generic, flat);

    std::vector<SfMonomial> pool;
    for (const ExtMonomial& f : generic.gens) {
        std::vector<int> zidx = mask_indices(f.zs);
        // Every dummy set D inside the z-support, crossed with every choice
        // of a non-representative element for each index in D; indices
        // outside D take the group's representative (its last element).
        for (Mask d = f.zs;; d = (d - 1) & f.zs) {
            std::vector<int> dummy;
            std::vector<std::size_t> radix;
            bool feasible = true;
            for (int i : zidx)
                if (d & index_bit(i)) {
                    std::size_t r = groups[i - 1].size() - 1;
                    if (r == 0) {
                        feasible = false;
                        break;
                    }
                    dummy.push_back(i);
                    radix.push_back(r);
                }
            if (feasible) {
                std::vector<std::size_t> choice(dummy.size(), 0);
                for (;;) {
                    SfMonomial m = f.base;
                    for (int i : zidx) {
                        if (d & index_bit(i)) continue;
                        m = lcm_sf(m, groups[i - 1].back());
                    }
                    for (std::size_t t = 0; t < dummy.size(); ++t)
                        m = lcm_sf(m, groups[dummy[t] - 1][choice[t]]);
                    if (!m.boolean_part()) pool.push_back(m);
                    std::size_t t = 0;
                    while (t < choice.size() && ++choice[t] == radix[t])
                        choice[t++] = 0;
                    if (t == choice.size()) break;
                }
            }
            if (d == 0) break;
        }
    }
    std::sort(pool.begin(), pool.end(), canonical_less);
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return MonomialIdeal{generic.n, std::move(pool)};
}

MonomialIdeal chain_ideal(int k, const std::vector<SfMonomial>& gs) {
    if (k < 1) throw std::invalid_argument("chain families need k >= 1");
    if (static_cast<int>(gs.size()) != k)
        throw std::invalid_argument("expected " + std::to_string(k) +
                                    " chain monomials, got " +
                                    std::to_string(gs.size()));
    int n = gs[0].n;
    check_gs_widths(gs, n);
    Mask struct_mask = full_mask(k - 1);
    if (struct_mask & ~full_mask(n))
        throw std::invalid_argument("ambient width too small for the chain");
    check_family_gs(struct_mask, nullptr, gs);

    MonomialIdeal out{n, {}};
    for (int j = 1; j <= k; ++j) {
        Mask sx = j < k ? index_bit(j) : 0;
        Mask sy = j > 1 ? index_bit(j - 1) : 0;
        out.gens.push_back(SfMonomial(n, gs[j - 1].xs | sx, gs[j - 1].ys | sy));
    }
    return out;
}

MonomialIdeal chain_canonical(int k, const std::vector<SfMonomial>& gs) {
    MonomialIdeal chain = chain_ideal(k, gs);
    int n = chain.n;

    MonomialIdeal out{n, {}};
    for (int j = 0; j < k; ++j) {
        SfMonomial acc(n, 0, 0);
        for (int m = j + 1; m <= k; ++m) {
            acc = lcm_sf(acc, gs[m - 1]);
            Mask sx = m < k ? index_bit(m) : 0;
            Mask sy = j > 0 ? index_bit(j) : 0;
            out.gens.push_back(SfMonomial(n, acc.xs | sx, acc.ys | sy));
        }
    }
    return finish_family(std::move(out));
}

MonomialIdeal cycle_ideal(int k, const std::vector<SfMonomial>& gs) {
    if (k < 3) throw std::domain_error("cycle families need k >= 3");
    if (static_cast<int>(gs.size()) != k)
        throw std::invalid_argument("expected " + std::to_string(k) +
                                    " cycle monomials, got " +
                                    std::to_string(gs.size()));
    int n = gs[0].n;
    check_gs_widths(gs, n);
    Mask struct_mask = full_mask(k);
    if (struct_mask & ~full_mask(n))
        throw std::invalid_argument("ambient width too small for the cycle");
    check_family_gs(struct_mask, nullptr, gs);

    MonomialIdeal out{n, {}};
    for (int j = 1; j <= k; ++j) {
        Mask sy = index_bit(j == 1 ? k : j - 1);
        out.gens.push_back(
            SfMonomial(n, gs[j - 1].xs | index_bit(j), gs[j - 1].ys | sy));
    }
    return out;
}

MonomialIdeal cycle_canonical(int k, const std::vector<SfMonomial>& gs) {
    MonomialIdeal cycle = cycle_ideal(k, gs);
    int n = cycle.n;

    MonomialIdeal out{n, {}};
    for (int j = 1; j <= k; ++j) {
        SfMonomial acc(n, 0, 0);
        for (int m = 1; m <= k - 1; ++m) {
            int idx = (j + m - 1) % k + 1;
            acc = lcm_sf(acc, gs[idx - 1]);
            out.gens.push_back(
                SfMonomial(n, acc.xs | index_bit(idx), acc.ys | index_bit(j)));
        }
    }
    return finish_family(std::move(out));
}

namespace {

struct SpreadParts {
    int n = 0;
    Mask struct_mask = 0;
    std::vector<Mask> group_masks;
    std::vector<int> singles;  ///< positions of singleton groups
};

SpreadParts check_spread(const SpreadShape& shape, const SfMonomial& g,
                         const std::vector<SfMonomial>& gs) {
    if (shape.k < 1) throw std::invalid_argument("spread families need k >= 1");
    if (gs.size() != shape.groups.size())
        throw std::invalid_argument(
            "expected one monomial per y-group, got " +
            std::to_string(gs.size()) + " for " +
            std::to_string(shape.groups.size()) + " groups");
    SpreadParts p;
    p.n = g.n;
    check_gs_widths(gs, p.n);
    p.struct_mask = full_mask(shape.k);
    if (p.struct_mask & ~full_mask(p.n))
        throw std::invalid_argument("ambient width too small for the spread");

    Mask seen = 0;
    for (std::size_t j = 0; j < shape.groups.size(); ++j) {
        if (shape.groups[j].empty())
            throw std::invalid_argument("y-group " + std::to_string(j + 1) +
                                        " is empty");
        Mask m = 0;
        for (int i : shape.groups[j]) {
            if (i < 1 || i > shape.k)
                throw std::invalid_argument("y-group index " +
                                            std::to_string(i) +
                                            " outside 1..k");
            if (seen & index_bit(i))
                throw std::invalid_argument("y-groups overlap at index " +
                                            std::to_string(i));
            seen |= index_bit(i);
            m |= index_bit(i);
        }
        p.group_masks.push_back(m);
        if (shape.groups[j].size() == 1)
            p.singles.push_back(static_cast<int>(j));
    }
    if (seen != p.struct_mask)
        throw std::invalid_argument("y-groups must partition 1..k");

    check_family_gs(p.struct_mask, &g, gs);
    return p;
}

/// Attach structural masks, honoring the flipped orientation.
SfMonomial attach(const SpreadShape& shape, int n, Mask xpart, Mask ypart,
                  const SfMonomial& m) {
    if (shape.flipped) std::swap(xpart, ypart);
    return SfMonomial(n, m.xs | xpart, m.ys | ypart);
}

}  // namespace

MonomialIdeal spread_ideal(const SpreadShape& shape, const SfMonomial& g,
                           const std::vector<SfMonomial>& gs) {
    SpreadParts p = check_spread(shape, g, gs);
    MonomialIdeal out{p.n, {}};
    out.gens.push_back(attach(shape, p.n, p.struct_mask, 0, g));
    for (std::size_t j = 0; j < gs.size(); ++j)
        out.gens.push_back(attach(shape, p.n, 0, p.group_masks[j], gs[j]));
    return out;
}

MonomialIdeal spread_canonical(const SpreadShape& shape, const SfMonomial& g,
                               const std::vector<SfMonomial>& gs) {
    SpreadParts p = check_spread(shape, g, gs);
    MonomialIdeal out{p.n, {}};
    for (std::size_t j = 0; j < gs.size(); ++j)
        out.gens.push_back(attach(shape, p.n, 0, p.group_masks[j], gs[j]));
    // Only singleton y-groups recompose with the x-side generator: for every
    // subset T of them, drop their x_i and absorb their monomials instead.
    std::size_t nsingles = p.singles.size();
    for (Mask t = 0; t < (Mask{1} << nsingles); ++t) {
        Mask xmask = p.struct_mask;
        SfMonomial m = g;
        for (std::size_t s = 0; s < nsingles; ++s)
            if (t & (Mask{1} << s)) {
                int j = p.singles[s];
                xmask &= ~p.group_masks[j];
                m = lcm_sf(m, gs[j]);
            }
        out.gens.push_back(attach(shape, p.n, xmask, 0, m));
    }
    return finish_family(std::move(out));
}

ExtMonomial parse_ext_monomial(std::string_view text, int n, int k, int line) {
    auto fs = detail::tokenize_monomial(text, line, /*allow_z=*/true);
    Mask xs = 0, ys = 0, zs = 0;
    for (const detail::Factor& f : fs) {
        if (f.axis == 'z') {
            if (f.index > k)
                throw ParseError("index " + std::to_string(f.index) +
                                     " exceeds placeholder count k = " +
                                     std::to_string(k),
                                 line, f.col);
            zs |= index_bit(f.index);
        } else {
            if (f.index > n)
                throw ParseError("index " + std::to_string(f.index) +
                                     " exceeds ambient width n = " +
                                     std::to_string(n),
                                 line, f.col);
            (f.axis == 'x' ? xs : ys) |= index_bit(f.index);
        }
    }
    return ExtMonomial{SfMonomial(n, xs, ys), zs};
}

std::string format_ext_monomial(const ExtMonomial& m) {
    if (m.base.is_one() && m.zs == 0) return "1";
    std::string out;
    auto append = [&out](char axis, Mask mask) {
        for (int i : mask_indices(mask)) {
            if (!out.empty()) out += '*';
            out += axis;
            out += std::to_string(i);
        }
    };
    append('x', m.base.xs);
    append('y', m.base.ys);
    append('z', m.zs);
    return out;
}

ExtIdeal parse_ext_ideal(std::string_view text, int n_override, int k_override) {
    auto lines = detail::significant_lines(text);
    std::size_t first = 0;
    int header_n = 0;
    if (!lines.empty())
        header_n = detail::parse_width_header(lines[0].second, lines[0].first);
    if (header_n) first = 1;

    std::vector<std::pair<int, std::vector<detail::Factor>>> rows;
    int max_xy = 0, max_z = 0;
    for (std::size_t i = first; i < lines.size(); ++i) {
        auto fs = detail::tokenize_monomial(lines[i].second, lines[i].first,
                                            /*allow_z=*/true);
        for (const detail::Factor& f : fs) {
            int& mx = f.axis == 'z' ? max_z : max_xy;
            mx = std::max(mx, f.index);
        }
        rows.emplace_back(lines[i].first, std::move(fs));
    }

    int n = n_override ? n_override : (header_n ? header_n : std::max(max_xy, 1));
    int k = k_override ? k_override : max_z;
    ExtIdeal a{n, k, {}};
    a.gens.reserve(rows.size());
    for (const auto& [line, fs] : rows) {
        Mask xs = 0, ys = 0, zs = 0;
        for (const detail::Factor& f : fs) {
            int cap = f.axis == 'z' ? k : n;
            if (f.index > cap)
                throw ParseError(
                    "index " + std::to_string(f.index) + " exceeds " +
                        (f.axis == 'z' ? "placeholder count k = " +
                                             std::to_string(k)
                                       : "ambient width n = " +
                                             std::to_string(n)),
                    line, f.col);
            if (f.axis == 'z')
                zs |= index_bit(f.index);
            else
                (f.axis == 'x' ? xs : ys) |= index_bit(f.index);
        }
        a.gens.push_back(ExtMonomial{SfMonomial(n, xs, ys), zs});
    }
    check_ext_ideal(a);
    return a;
}

}  // namespace polycanon
