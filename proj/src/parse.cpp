#include "polycanon/parse.hpp"

#include <algorithm>
#include <cctype>

namespace polycanon {

namespace detail {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Reads DIGIT+ at pos, returns the value; pos advances past the digits.
int read_index(std::string_view s, std::size_t& pos, int line, char axis) {
    std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > kMaxVars) v = kMaxVars + 1;  // clamp; reported below
        ++pos;
    }
    if (pos == start)
        throw ParseError(std::string("expected digits after '") + axis + "'",
                         line, static_cast<int>(start) + 1);
    if (v < 1)
        throw ParseError("variable index must be at least 1", line,
                         static_cast<int>(start) + 1);
    if (v > kMaxVars)
        throw ParseError("variable index exceeds the build-time cap of " +
                             std::to_string(kMaxVars),
                         line, static_cast<int>(start) + 1);
    return static_cast<int>(v);
}

}  // namespace

std::vector<Factor> tokenize_monomial(std::string_view text, int line,
                                      bool allow_z, bool allow_one_minus) {
    std::vector<Factor> out;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && is_ws(text[pos])) ++pos; };

    skip_ws();
    if (pos == text.size())
        throw ParseError("empty monomial", line, static_cast<int>(pos) + 1);

    if (text[pos] == '1') {
        // the constant monomial stands alone
        std::size_t one = pos++;
        skip_ws();
        if (pos != text.size())
            throw ParseError("'1' cannot be combined with further factors",
                             line, static_cast<int>(pos) + 1);
        (void)one;
        return out;
    }

    bool expect_factor = true;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        char c = text[pos];
        if (c == '*') {
            if (expect_factor)
                throw ParseError("expected a factor before '*'", line,
                                 static_cast<int>(pos) + 1);
            ++pos;
            expect_factor = true;
            continue;
        }
        int col = static_cast<int>(pos) + 1;
        if (c == 'x' || c == 'y' || (allow_z && c == 'z')) {
            ++pos;
            int idx = read_index(text, pos, line, c);
            out.push_back({c, idx, col});
            expect_factor = false;
        } else if (allow_one_minus && c == '(') {
            // "(1-xK)" is the depolarized spelling of yK
            ++pos;
            if (pos + 2 < text.size() && text[pos] == '1' && text[pos + 1] == '-' &&
                text[pos + 2] == 'x') {
                pos += 3;
                int idx = read_index(text, pos, line, 'x');
                if (pos >= text.size() || text[pos] != ')')
                    throw ParseError("expected ')' closing '(1-xK)'", line,
                                     static_cast<int>(pos) + 1);
                ++pos;
                out.push_back({'y', idx, col});
                expect_factor = false;
            } else {
                throw ParseError("expected '(1-xK)'", line, col);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'",
                             line, col);
        }
    }
    if (expect_factor)
        throw ParseError("trailing '*' without a factor", line,
                         static_cast<int>(text.size()) + 1);
    return out;
}

std::vector<std::pair<int, std::string>> significant_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line;
        if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::size_t b = 0, e = raw.size();
        while (b < e && is_ws(raw[b])) ++b;
        while (e > b && is_ws(raw[e - 1])) --e;
        if (e > b) out.emplace_back(line, std::string(raw.substr(b, e - b)));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

int parse_width_header(std::string_view s, int line) {
    std::size_t pos = 0;
    if (pos >= s.size() || s[pos] != 'n') return 0;
    ++pos;
    while (pos < s.size() && is_ws(s[pos])) ++pos;
    if (pos >= s.size() || s[pos] != '=') return 0;
    ++pos;
    while (pos < s.size() && is_ws(s[pos])) ++pos;
    std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 4 * kMaxVars) break;
        ++pos;
    }
    if (pos == start || pos != s.size())
        throw ParseError("malformed width header, expected 'n = <int>'", line,
                         static_cast<int>(pos) + 1);
    if (v < 1 || v > kMaxVars)
        throw ParseError("width must lie in [1, " + std::to_string(kMaxVars) + "]",
                         line, static_cast<int>(start) + 1);
    return static_cast<int>(v);
}

}  // namespace detail

namespace {

SfMonomial factors_to_monomial(const std::vector<detail::Factor>& fs, int n,
                               int line) {
    Mask xs = 0, ys = 0;
    for (const detail::Factor& f : fs) {
        if (f.index > n)
            throw ParseError("index " + std::to_string(f.index) +
                                 " exceeds ambient width n = " + std::to_string(n),
                             line, f.col);
        (f.axis == 'x' ? xs : ys) |= index_bit(f.index);
    }
    return SfMonomial(n, xs, ys);
}

}  // namespace

SfMonomial parse_monomial(std::string_view text, int n, int line) {
    return factors_to_monomial(
        detail::tokenize_monomial(text, line, /*allow_z=*/false), n, line);
}

std::string format_monomial(const SfMonomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (int i : mask_indices(m.xs)) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
    }
    for (int i : mask_indices(m.ys)) {
        if (!out.empty()) out += '*';
        out += 'y';
        out += std::to_string(i);
    }
    return out;
}

std::string format_depolarized(const Pseudomonomial& f) {
    if (f.sigma == 0 && f.tau == 0) return "1";
    std::string out;
    for (int i : mask_indices(f.sigma)) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i);
    }
    for (int i : mask_indices(f.tau)) {
        if (!out.empty()) out += '*';
        out += "(1-x" + std::to_string(i) + ")";
    }
    return out;
}

MonomialIdeal parse_ideal(std::string_view text, int n_override) {
    auto lines = detail::significant_lines(text);
    std::size_t first = 0;
    int header_n = 0;
    if (!lines.empty())
        header_n = detail::parse_width_header(lines[0].second, lines[0].first);
    if (header_n) first = 1;

    std::vector<std::pair<int, std::vector<detail::Factor>>> rows;
    int max_index = 0;
    for (std::size_t i = first; i < lines.size(); ++i) {
        auto fs = detail::tokenize_monomial(lines[i].second, lines[i].first,
                                            /*allow_z=*/false);
        for (const detail::Factor& f : fs) max_index = std::max(max_index, f.index);
        rows.emplace_back(lines[i].first, std::move(fs));
    }

    int n = n_override ? n_override : (header_n ? header_n : std::max(max_index, 1));
    MonomialIdeal a{n, {}};
    a.gens.reserve(rows.size());
    for (const auto& [line, fs] : rows)
        a.gens.push_back(factors_to_monomial(fs, n, line));
    return a;
}

std::string format_ideal(const MonomialIdeal& a) {
    std::string out;
    for (const SfMonomial& g : a.gens) {
        out += format_monomial(g);
        out += '\n';
    }
    return out;
}

}  // namespace polycanon
