/**
 * @file polycanon.cpp
 * @brief Command-line front end for the polycanon library.
 *
 * Exit codes: 0 success (for `check`: canonical), 1 `check` found a
 * non-canonical ideal, 2 parse error (or `check` hypothesis violation),
 * 3 domain/width error, 4 strategy disagreement under `canon --strategy both`.
 */
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polycanon/canonical.hpp"
#include "polycanon/canonicity.hpp"
#include "polycanon/decomposition.hpp"
#include "polycanon/families.hpp"
#include "polycanon/monomial.hpp"
#include "polycanon/oracle.hpp"
#include "polycanon/parse.hpp"

namespace {

using nlohmann::json;
using namespace polycanon;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json monomial_strings(const std::vector<SfMonomial>& gens) {
    json arr = json::array();
    for (const SfMonomial& g : gens) arr.push_back(format_monomial(g));
    return arr;
}

std::string format_prime(const MonomialPrime& p) {
    std::string out;
    for (int i = 1; i <= p.n; ++i) {
        if (p.xvars & index_bit(i)) {
            if (!out.empty()) out += ", ";
            out += "x" + std::to_string(i);
        }
        if (p.yvars & index_bit(i)) {
            if (!out.empty()) out += ", ";
            out += "y" + std::to_string(i);
        }
    }
    return out;
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_canon(const std::string& path, int n_override,
              const std::string& strategy, bool as_json) {
    MonomialIdeal a = parse_ideal(read_input(path), n_override);
    CanonicalResult res;
    if (strategy == "full") {
        res = canonical_full(a);
    } else if (strategy == "both") {
        CanonicalResult full = canonical_full(a);
        CanonicalResult fast = canonical_fast(a);
        if (!same_generator_set(full.canonical, fast.canonical)) {
            std::cerr << "error: strategies disagree\n";
            for (const SfMonomial& g : full.canonical.gens)
                std::cerr << "  full: " << format_monomial(g) << '\n';
            for (const SfMonomial& g : fast.canonical.gens)
                std::cerr << "  fast: " << format_monomial(g) << '\n';
            return 4;
        }
        res = std::move(full);
    } else {
        res = canonical_fast(a);
    }

    if (as_json) {
        emit_json(json{{"n", a.n},
                       {"input", monomial_strings(a.gens)},
                       {"result", monomial_strings(res.canonical.gens)},
                       {"canonical", res.was_already_canonical},
                       {"strategy", strategy},
                       {"added", monomial_strings(res.added)},
                       {"removed", monomial_strings(res.removed)}});
    } else {
        std::cout << format_ideal(res.canonical);
    }
    return 0;
}

int run_check(const std::string& path, int n_override, bool as_json) {
    MonomialIdeal a = parse_ideal(read_input(path), n_override);
    CanonicityVerdict v = is_canonical(a);

    int status = 0;
    std::string text;
    json detail;
    if (v.canonical) {
        text = "canonical";
    } else if (v.witness) {
        status = 1;
        text = "not canonical: generators " + std::to_string(v.witness->j1 + 1) +
               " and " + std::to_string(v.witness->j2 + 1) +
               " share only index " + std::to_string(v.witness->index) +
               " and nothing divides the recomposition";
        detail = json{{"j1", v.witness->j1 + 1},
                      {"j2", v.witness->j2 + 1},
                      {"index", v.witness->index}};
    } else {
        status = 2;
        if (v.precondition->kind == PreconditionKind::BooleanGenerator) {
            text = "hypotheses violated: generator " +
                   std::to_string(v.precondition->j1 + 1) +
                   " is Boolean-divisible at index " +
                   std::to_string(v.precondition->j2);
        } else {
            text = "hypotheses violated: generator " +
                   std::to_string(v.precondition->j1 + 1) +
                   " divides generator " + std::to_string(v.precondition->j2 + 1);
        }
        detail = json{{"kind", v.precondition->kind ==
                                       PreconditionKind::BooleanGenerator
                                   ? "boolean-generator"
                                   : "divisor-pair"},
                      {"j1", v.precondition->j1 + 1},
                      {"j2", v.precondition->j2 + 1}};
    }

    if (as_json) {
        json j{{"n", a.n},
               {"input", monomial_strings(a.gens)},
               {"canonical", v.canonical},
               {"verdict", text}};
        if (v.witness) j["witness"] = detail;
        if (v.precondition) j["precondition"] = detail;
        emit_json(j);
    } else {
        std::cout << text << '\n';
    }
    return status;
}

int run_decompose(const std::string& path, int n_override, bool as_json) {
    MonomialIdeal a = parse_ideal(read_input(path), n_override);
    std::vector<MonomialPrime> ps = minimal_primes(a);
    if (as_json) {
        json arr = json::array();
        for (const MonomialPrime& p : ps) arr.push_back(format_prime(p));
        emit_json(json{{"n", a.n},
                       {"input", monomial_strings(a.gens)},
                       {"result", arr}});
    } else {
        for (const MonomialPrime& p : ps) std::cout << format_prime(p) << '\n';
    }
    return 0;
}

int run_polarize(const std::string& path, int n_override, bool depolarize_out,
                 bool as_json) {
    MonomialIdeal a = parse_ideal(read_input(path), n_override);
    std::vector<std::string> lines;
    for (const SfMonomial& g : a.gens)
        lines.push_back(depolarize_out ? format_depolarized(depolarize(g))
                                       : format_monomial(g));
    if (as_json) {
        json arr = json::array();
        for (const std::string& s : lines) arr.push_back(s);
        emit_json(json{{"n", a.n},
                       {"input", monomial_strings(a.gens)},
                       {"result", arr}});
    } else {
        for (const std::string& s : lines) std::cout << s << '\n';
    }
    return 0;
}

int oracle_cap() {
    int cap = 12;
    if (const char* env = std::getenv("POLYCANON_ORACLE_MAX_N")) {
        cap = std::atoi(env);
        if (cap < 1 || cap > kOracleMaxN)
            throw std::invalid_argument(
                "POLYCANON_ORACLE_MAX_N must lie in [1, " +
                std::to_string(kOracleMaxN) + "]");
    }
    return cap;
}

int run_oracle(const std::string& path, int n_override, bool code_input,
               bool as_json) {
    std::string text = read_input(path);
    int cap = oracle_cap();
    auto check_cap = [cap](int n) {
        if (n > cap)
            throw std::domain_error(
                "oracle width n = " + std::to_string(n) +
                " exceeds the cap of " + std::to_string(cap) +
                " (raise POLYCANON_ORACLE_MAX_N, hard limit " +
                std::to_string(kOracleMaxN) + ")");
    };

    NeuralCode c;
    json input_echo;
    int n;
    if (code_input) {
        c = parse_code(text, n_override);
        n = c.n;
        check_cap(n);
        input_echo = json::array();
        for (Mask w : c.words) {
            std::string s;
            for (int i = 1; i <= c.n; ++i) s += (w & index_bit(i)) ? '1' : '0';
            input_echo.push_back(s);
        }
    } else {
        MonomialIdeal a = parse_ideal(text, n_override);
        n = a.n;
        check_cap(n);
        input_echo = monomial_strings(a.gens);
        c = code_of_ideal(a);
    }

    MonomialIdeal result = oracle_canonical(c);
    if (as_json) {
        emit_json(json{{"n", n},
                       {"input", input_echo},
                       {"result", monomial_strings(result.gens)}});
    } else {
        std::cout << format_ideal(result);
    }
    return 0;
}

/// Width needed to parse family monomials: structural indices plus overrides.
int family_width(int structural, int n_override,
                 const std::vector<std::string>& texts) {
    int n = std::max(structural, 1);
    for (const std::string& t : texts)
        for (const auto& f : detail::tokenize_monomial(t, 1, /*allow_z=*/false))
            n = std::max(n, f.index);
    return std::max(n, n_override);
}

std::vector<SfMonomial> parse_family_gs(const std::vector<std::string>& texts,
                                        std::size_t count, int n) {
    std::vector<std::string> padded = texts;
    if (padded.empty()) padded.assign(count, "1");
    if (padded.size() != count)
        throw std::invalid_argument("expected " + std::to_string(count) +
                                    " monomials via --g, got " +
                                    std::to_string(padded.size()));
    std::vector<SfMonomial> gs;
    gs.reserve(count);
    for (const std::string& t : padded) gs.push_back(parse_monomial(t, n));
    return gs;
}

int emit_family(const MonomialIdeal& input, const MonomialIdeal& result,
                bool as_json) {
    if (as_json) {
        emit_json(json{{"n", result.n},
                       {"input", monomial_strings(input.gens)},
                       {"result", monomial_strings(result.gens)}});
    } else {
        std::cout << format_ideal(result);
    }
    return 0;
}

std::vector<int> parse_group_spec(const std::string& spec) {
    std::vector<int> out;
    std::string cur;
    for (char ch : std::string(spec) + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) out.push_back(std::atoi(cur.c_str()));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur += ch;
        } else {
            throw std::invalid_argument("malformed --group, expected indices: " +
                                        spec);
        }
    }
    if (out.empty())
        throw std::invalid_argument("malformed --group, expected indices: " + spec);
    return out;
}

int run_generic(const std::string& path, int n_override, int k_override,
                const std::vector<std::string>& apply, bool as_json) {
    ExtIdeal a = parse_ext_ideal(read_input(path), n_override, k_override);
    // Substitution images may live in a wider ring than the generic input.
    int n_eff = a.n;
    for (const std::string& t : apply)
        for (const auto& f : detail::tokenize_monomial(t, 1, /*allow_z=*/false))
            n_eff = std::max(n_eff, f.index);
    if (n_eff > a.n) {
        for (ExtMonomial& m : a.gens)
            m.base = SfMonomial(n_eff, m.base.xs, m.base.ys);
        a.n = n_eff;
    }
    ExtIdeal g = generic_canonical(a);

    json input_echo = json::array();
    for (const ExtMonomial& m : a.gens) input_echo.push_back(format_ext_monomial(m));

    if (!apply.empty()) {
        Substitution sub;
        for (const std::string& t : apply)
            sub.images.push_back(parse_monomial(t, a.n));
        MonomialIdeal concrete = substitute(g, sub);
        if (as_json) {
            emit_json(json{{"n", a.n},
                           {"k", a.k},
                           {"input", input_echo},
                           {"result", monomial_strings(concrete.gens)}});
        } else {
            std::cout << format_ideal(concrete);
        }
        return 0;
    }

    if (as_json) {
        json arr = json::array();
        for (const ExtMonomial& m : g.gens) arr.push_back(format_ext_monomial(m));
        emit_json(json{{"n", a.n}, {"k", a.k}, {"input", input_echo}, {"result", arr}});
    } else {
        for (const ExtMonomial& m : g.gens)
            std::cout << format_ext_monomial(m) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical forms of polarized neural ideals"};
    app.require_subcommand(1);

    std::string path = "-";
    int n_override = 0;
    int k_override = 0;
    bool as_json = false;
    std::string strategy = "fast";
    bool code_input = false;
    bool flip = false;
    int k = 0;
    std::string base = "1";
    std::vector<std::string> g_texts;
    std::vector<std::string> group_specs;
    std::vector<std::string> apply;

    auto add_common = [&](CLI::App* cmd, bool with_file) {
        if (with_file)
            cmd->add_option("file", path, "input file, or - for stdin");
        cmd->add_option("--n", n_override, "ambient width override");
        cmd->add_flag("--json", as_json, "structured output");
    };

    CLI::App* canon = app.add_subcommand("canon", "compute the canonical form");
    add_common(canon, true);
    canon->add_option("--strategy", strategy, "fast, full, or both")
        ->check(CLI::IsMember({"fast", "full", "both"}));

    CLI::App* check = app.add_subcommand("check", "decide canonicity");
    add_common(check, true);

    CLI::App* decomp = app.add_subcommand("decompose", "minimal primes");
    add_common(decomp, true);

    CLI::App* pol = app.add_subcommand("polarize", "emit x/y monomial form");
    add_common(pol, true);

    CLI::App* depol = app.add_subcommand("depolarize", "emit x/(1-x) form");
    add_common(depol, true);

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force canonical form");
    add_common(oracle, true);
    oracle->add_flag("--code", code_input, "input is a code file, not an ideal");

    CLI::App* family = app.add_subcommand("family", "closed-form families");
    family->require_subcommand(1);
    CLI::App* chain = family->add_subcommand("chain", "chain family");
    CLI::App* cycle = family->add_subcommand("cycle", "cycle family");
    CLI::App* spread = family->add_subcommand("spread", "spread family");
    for (CLI::App* fam : {chain, cycle, spread}) {
        fam->add_option("--k", k, "number of structural indices")->required();
        fam->add_option("--g", g_texts, "per-slot monomial (repeatable)")
            ->allow_extra_args(false);
        fam->add_option("--n", n_override, "ambient width override");
        fam->add_flag("--json", as_json, "structured output");
    }
    spread->add_option("--group", group_specs,
                       "y-group indices, e.g. --group 1,2 (repeatable)")
        ->required()
        ->allow_extra_args(false);
    spread->add_option("--base", base, "monomial attached to the x-side");
    spread->add_flag("--flip", flip, "swap the structural x/y roles");

    CLI::App* generic = app.add_subcommand("generic", "canonical form over z placeholders");
    add_common(generic, true);
    generic->add_option("--k", k_override, "placeholder count override");
    generic->add_option("--apply", apply,
                        "image of each z (repeatable); substitutes after")
        ->allow_extra_args(false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (canon->parsed()) return run_canon(path, n_override, strategy, as_json);
        if (check->parsed()) return run_check(path, n_override, as_json);
        if (decomp->parsed()) return run_decompose(path, n_override, as_json);
        if (pol->parsed()) return run_polarize(path, n_override, false, as_json);
        if (depol->parsed()) return run_polarize(path, n_override, true, as_json);
        if (oracle->parsed())
            return run_oracle(path, n_override, code_input, as_json);
        if (chain->parsed()) {
            int n = family_width(k - 1, n_override, g_texts);
            std::vector<SfMonomial> gs = parse_family_gs(g_texts, k, n);
            return emit_family(chain_ideal(k, gs), chain_canonical(k, gs), as_json);
        }
        if (cycle->parsed()) {
            int n = family_width(k, n_override, g_texts);
            std::vector<SfMonomial> gs = parse_family_gs(g_texts, k, n);
            return emit_family(cycle_ideal(k, gs), cycle_canonical(k, gs), as_json);
        }
        if (spread->parsed()) {
            SpreadShape shape;
            shape.k = k;
            shape.flipped = flip;
            for (const std::string& s : group_specs)
                shape.groups.push_back(parse_group_spec(s));
            std::vector<std::string> all = g_texts;
            all.push_back(base);
            int n = family_width(k, n_override, all);
            SfMonomial b = parse_monomial(base, n);
            std::vector<SfMonomial> gs =
                parse_family_gs(g_texts, shape.groups.size(), n);
            return emit_family(spread_ideal(shape, b, gs),
                               spread_canonical(shape, b, gs), as_json);
        }
        if (generic->parsed())
            return run_generic(path, n_override, k_override, apply, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
