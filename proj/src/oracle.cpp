#include "polycanon/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "polycanon/kernels.hpp"
#include "polycanon/parse.hpp"

namespace polycanon {

namespace {

void check_oracle_width(int n) {
    if (n > kOracleMaxN)
        throw std::invalid_argument(
            "exhaustive enumeration is capped at n <= " +
            std::to_string(kOracleMaxN) + ", got n = " + std::to_string(n));
}

}  // namespace

NeuralCode make_code(int n, std::vector<Mask> words) {
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("width must lie in [1, " +
                                    std::to_string(kMaxVars) + "]");
    for (Mask w : words)
        if (w & ~full_mask(n))
            throw std::invalid_argument(
                "code word has bits outside the ambient width");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return NeuralCode{n, std::move(words)};
}

bool evaluate(const Pseudomonomial& f, Mask v) {
    if (v & ~full_mask(f.n))
        throw std::invalid_argument(
            "evaluation point has bits outside the ambient width");
    return (f.sigma & ~v) == 0 && (f.tau & v) == 0;
}

NeuralCode code_of_ideal(const MonomialIdeal& a) {
    check_ideal(a);
    check_oracle_width(a.n);
    std::vector<Pseudomonomial> fs;
    fs.reserve(a.gens.size());
    for (const SfMonomial& g : a.gens) fs.push_back(depolarize(g));

    NeuralCode c{a.n, {}};
    for (Mask v = 0; v <= full_mask(a.n); ++v) {
        bool all_vanish = true;
        for (const Pseudomonomial& f : fs)
            if (evaluate(f, v)) {
                all_vanish = false;
                break;
            }
        if (all_vanish) c.words.push_back(v);
    }
    return c;
}

MonomialIdeal oracle_canonical(const NeuralCode& c) {
    check_oracle_width(c.n);
    if (c.words.empty())
        throw std::domain_error(
            "degenerate code: every pseudomonomial vanishes on the empty code");

    int n = c.n;
    const std::uint64_t* words = c.words.data();
    std::size_t wcount = c.words.size();

    // Ternary counter over the indices, index 1 fastest: digit 0 leaves the
    // index out, 1 contributes x_i to sigma, 2 contributes (1 - x_i) to tau.
    std::vector<std::pair<Mask, Mask>> vanishing;
    std::vector<std::uint8_t> digit(n, 0);
    Mask sigma = 0, tau = 0;
    for (;;) {
        if ((sigma | tau) &&
            kernels::vanishes_on_all(sigma, tau, words, wcount))
            vanishing.emplace_back(sigma, tau);
        int t = 0;
        while (t < n) {
            Mask b = index_bit(t + 1);
            if (digit[t] == 0) {
                digit[t] = 1;
                sigma |= b;
                break;
            }
            if (digit[t] == 1) {
                digit[t] = 2;
                sigma &= ~b;
                tau |= b;
                break;
            }
            digit[t] = 0;
            tau &= ~b;
            ++t;
        }
        if (t == n) break;
    }

    // Divisibility-minimal filter. Sorted by degree first, every strict
    // divisor of a candidate precedes it, and if that divisor was itself
    // dropped it has an accepted strict divisor in turn, so scanning the
    // accepted prefix is enough.
    std::sort(vanishing.begin(), vanishing.end(),
              [](const std::pair<Mask, Mask>& a, const std::pair<Mask, Mask>& b) {
                  int da = popcount(a.first) + popcount(a.second);
                  int db = popcount(b.first) + popcount(b.second);
                  if (da != db) return da < db;
                  if (a.first != b.first) return mask_set_less(a.first, b.first);
                  return mask_set_less(a.second, b.second);
              });
    MonomialIdeal out{n, {}};
    std::vector<std::uint64_t> ax, ay;
    for (const auto& [s, t] : vanishing) {
        if (kernels::any_strict_divisor(ax.data(), ay.data(), ax.size(), s, t))
            continue;
        out.gens.push_back(polarize(Pseudomonomial(n, s, t)));
        ax.push_back(s);
        ay.push_back(t);
    }
    return out;
}

MonomialIdeal ideal_of_code(const NeuralCode& c) {
    check_oracle_width(c.n);
    MonomialIdeal out{c.n, {}};
    for (Mask v = 0; v <= full_mask(c.n); ++v) {
        if (std::binary_search(c.words.begin(), c.words.end(), v)) continue;
        out.gens.push_back(SfMonomial(c.n, v, ~v & full_mask(c.n)));
    }
    return out;
}

NeuralCode parse_code(std::string_view text, int n_override) {
    auto lines = detail::significant_lines(text);
    std::size_t first = 0;
    int header_n = 0;
    if (!lines.empty())
        header_n = detail::parse_width_header(lines[0].second, lines[0].first);
    if (header_n) first = 1;

    int n = n_override ? n_override : header_n;
    std::vector<Mask> words;
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto& [line, s] = lines[i];
        if (n == 0) n = static_cast<int>(s.size());
        if (n < 1 || n > kMaxVars)
            throw ParseError("width must lie in [1, " +
                                 std::to_string(kMaxVars) + "]",
                             line, 1);
        if (static_cast<int>(s.size()) != n)
            throw ParseError("code word has length " +
                                 std::to_string(s.size()) +
                                 ", expected n = " + std::to_string(n),
                             line, 1);
        Mask w = 0;
        for (int j = 0; j < n; ++j) {
            if (s[j] == '1')
                w |= index_bit(j + 1);
            else if (s[j] != '0')
                throw ParseError("code words must consist of 0s and 1s", line,
                                 j + 1);
        }
        words.push_back(w);
    }
    return make_code(std::max(n, 1), std::move(words));
}

std::string format_code(const NeuralCode& c) {
    std::string out;
    for (Mask w : c.words) {
        for (int i = 1; i <= c.n; ++i)
            out += (w & index_bit(i)) ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace polycanon
