#ifndef DCOC_CLI_OPS_HPP
#define DCOC_CLI_OPS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcoc/errors.hpp"
#include "dcoc/solver.hpp"

namespace dcoc::cli {

// Exit-code contract: 0 = yes, 1 = no, 2 = error. Machine-readable output
// goes to the given stream (schema "v1" JSON documents, CSV for bench);
// diagnostics belong on stderr, which these functions never touch.

struct SolveArgs {
    std::string file;
    int ell = 1;
    int k = 0;
    std::string engine = "semicomplete"; // or "oracle"
    solver::ArcTest arc_test = solver::ArcTest::bitset;
    bool parallel = true;
    std::string argv_echo;
};

int cmd_solve(const SolveArgs& args, std::ostream& out);

struct VerifyArgs {
    std::string file;
    int ell = 1;
    int k = 0;
    std::vector<int> witness;
    std::string argv_echo;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out);

struct OracleArgs {
    std::string file;
    int ell = 1;
    int cap = -1; // -1: cap = n
    bool parallel = true;
    std::string argv_echo;
};

int cmd_oracle(const OracleArgs& args, std::ostream& out);

struct GenArgs {
    std::string spec;
    uint64_t seed = 1;
    std::string out_file; // empty: edge list on stdout
    std::string argv_echo;
};

int cmd_gen(const GenArgs& args, std::ostream& out);

struct BenchArgs {
    std::vector<std::string> specs;
    int ell = 1;
    int k = 0;
    int reps = 1;
    uint64_t seed = 1;
    solver::ArcTest arc_test = solver::ArcTest::bitset;
    bool parallel = true;
};

int cmd_bench(const BenchArgs& args, std::ostream& out);

struct GuessArgs {
    std::string file;
    std::vector<int> x;
    std::vector<int> x0;
    int ell = 1;
    long long trials = 100000;
    uint64_t seed = 1;
    bool parallel = true;
    std::string argv_echo;
};

int cmd_guess(const GuessArgs& args, std::ostream& out);

// error document for exit code 2
void write_error(std::ostream& out, const std::string& command, const Error& e);

std::vector<int> parse_vertex_list(const std::string& csv);

} // namespace dcoc::cli

#endif
