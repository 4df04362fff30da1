/**
 * Golden-transcript runner for the polycanon CLI.
 *
 * Usage: test_cli <cli-binary> <golden-dir> [suite]
 *
 * Every case feeds <golden-dir>/<name>.in to the CLI and compares stdout
 * byte-for-byte against <golden-dir>/<name>.out, plus the exit code. JSON
 * cases are additionally parsed and re-serialized to pin the layout. The
 * "legacy" suite carries transcripts recorded from an earlier hand
 * computation that the library intentionally does not reproduce.
 */
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Case {
    std::string name;
    std::string args;
    int exit_code = 0;
};

const std::vector<Case> kMainSuite = {
    {"canon_pair", "canon --strategy both -", 0},
    {"canon_recompose", "canon --strategy both -", 0},
    {"canon_json", "canon --strategy full --json -", 0},
    {"check_canonical", "check -", 0},
    {"check_witness", "check -", 1},
    {"check_boolean", "check -", 2},
    {"check_divisor", "check -", 2},
    {"check_json", "check --json -", 1},
    {"decompose_pair", "decompose -", 0},
    {"polarize_mixed", "polarize -", 0},
    {"depolarize_pair", "depolarize -", 0},
    {"oracle_ideal", "oracle -", 0},
    {"oracle_code", "oracle --code -", 0},
    {"family_chain", "family chain --k 3 --g x4 --g x5 --g x6", 0},
    {"family_chain_nested", "family chain --k 3 --g x3 --g x4 --g x3*x4", 0},
    {"family_cycle", "family cycle --k 3", 0},
    {"family_spread", "family spread --k 3 --group 1,2 --group 3 --g 1 --g x4",
     0},
    {"family_spread_flip",
     "family spread --k 3 --group 1,2 --group 3 --g 1 --g x4 --flip", 0},
    {"generic_pair", "generic -", 0},
    {"generic_apply", "generic --apply x2*x4 --apply x3*x4 -", 0},
    {"parse_error", "canon -", 2},
    {"unit_error", "canon -", 3},
    {"width_error", "canon --n 70 -", 3},
    {"oracle_cap", "oracle -", 3},
};

const std::vector<Case> kLegacySuite = {
    {"canon_recompose_legacy", "canon --strategy both -", 0},
};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: test_cli <cli-binary> <golden-dir> [suite]\n";
        return 2;
    }
    std::string cli = argv[1];
    std::filesystem::path golden = argv[2];
    std::string suite = argc > 3 ? argv[3] : "main";
    const std::vector<Case>& cases =
        suite == "legacy" ? kLegacySuite : kMainSuite;

    std::filesystem::path tmp = std::filesystem::temp_directory_path();
    int failures = 0;
    for (const Case& c : cases) {
        std::filesystem::path out_path = tmp / ("polycanon_" + c.name + ".out");
        std::filesystem::path err_path = tmp / ("polycanon_" + c.name + ".err");
        std::string cmd = "'" + cli + "' " + c.args + " < '" +
                          (golden / (c.name + ".in")).string() + "' > '" +
                          out_path.string() + "' 2> '" + err_path.string() +
                          "'";
        int status = std::system(cmd.c_str());
        int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

        std::vector<std::string> problems;
        if (exit_code != c.exit_code)
            problems.push_back("exit code " + std::to_string(exit_code) +
                               ", expected " + std::to_string(c.exit_code));

        std::string actual = read_file(out_path);
        std::string expected = read_file(golden / (c.name + ".out"));
        if (actual != expected)
            problems.push_back("stdout differs from " + c.name + ".out");

        // Failed checks report their verdict on stdout; only hard errors
        // (empty stdout) are required to diagnose themselves on stderr.
        if (c.exit_code >= 2 && expected.empty()) {
            std::string err = read_file(err_path);
            if (err.find("error") == std::string::npos)
                problems.push_back("stderr carries no error message");
        }

        if (c.args.find("--json") != std::string::npos && !actual.empty()) {
            try {
                nlohmann::json j = nlohmann::json::parse(actual);
                if (j.dump(2) + "\n" != actual)
                    problems.push_back("JSON output is not in dump(2) layout");
            } catch (const nlohmann::json::parse_error& e) {
                problems.push_back(std::string("invalid JSON: ") + e.what());
            }
        }

        if (problems.empty()) {
            std::cout << "ok " << c.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << c.name;
            for (const std::string& p : problems) std::cout << " [" << p << "]";
            std::cout << "\n";
            if (actual != expected) {
                std::cout << "--- expected ---\n"
                          << expected << "--- actual ---\n"
                          << actual << "----------------\n";
            }
        }
    }
    std::cout << failures << " of " << cases.size() << " cases failed\n";
    return failures > 125 ? 125 : failures;
}
