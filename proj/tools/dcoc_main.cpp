#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dcoc/cli_ops.hpp"
#include "dcoc/errors.hpp"

namespace {

std::string join_argv(int argc, char** argv) {
    std::ostringstream ss;
    for (int i = 0; i < argc; ++i) {
        if (i) ss << ' ';
        ss << argv[i];
    }
    return ss.str();
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

// --out redirects the machine-readable stream to a file
struct OutStream {
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) dcoc::fail("bad_args", "cannot open output file: " + path);
        }
    }
    std::ostream& get() { return file ? *file : std::cout; }
    std::unique_ptr<std::ofstream> file;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for directed component order connectivity"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread cap (0 = runtime default)");

    std::string out_path;
    app.add_option("--out", out_path, "write machine-readable output to this file");

    // solve
    dcoc::cli::SolveArgs solve_args;
    std::string solve_arc_test = "bitset";
    bool solve_serial = false;
    auto* solve = app.add_subcommand("solve", "decide an instance and emit a witness");
    solve->add_option("file", solve_args.file, "edge-list input")->required();
    solve->add_option("--ell", solve_args.ell, "component order bound")->required();
    solve->add_option("--k", solve_args.k, "deletion budget")->required();
    solve->add_option("--engine", solve_args.engine, "semicomplete | oracle");
    solve->add_option("--arc-test", solve_arc_test, "bitset | delta");
    solve->add_flag("--serial", solve_serial, "disable the OpenMP kernels");

    // verify
    dcoc::cli::VerifyArgs verify_args;
    std::string witness_csv;
    auto* verify = app.add_subcommand("verify", "check a witness against an instance");
    verify->add_option("file", verify_args.file)->required();
    verify->add_option("--ell", verify_args.ell)->required();
    verify->add_option("--k", verify_args.k)->required();
    verify->add_option("--witness", witness_csv, "comma-separated vertex ids (empty = no deletions)");

    // oracle
    dcoc::cli::OracleArgs oracle_args;
    bool oracle_serial = false;
    auto* oracle = app.add_subcommand("oracle", "exhaustive optimum (n <= 24)");
    oracle->add_option("file", oracle_args.file)->required();
    oracle->add_option("--ell", oracle_args.ell)->required();
    oracle->add_option("--cap", oracle_args.cap, "largest deletion set to try (default n)");
    oracle->add_flag("--serial", oracle_serial);

    // gen
    dcoc::cli::GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write a generated instance as an edge list");
    gen->add_option("spec", gen_args.spec, "family:key=value,... e.g. layered:sizes=3+3+5")->required();
    gen->add_option("--seed", gen_args.seed);

    // bench
    dcoc::cli::BenchArgs bench_args;
    std::string bench_arc_test = "bitset";
    bool bench_serial = false;
    auto* bench = app.add_subcommand("bench", "CSV timing sweep over generated instances");
    bench->add_option("specs", bench_args.specs, "generator specs")->required()->expected(-1);
    bench->add_option("--ell", bench_args.ell)->required();
    bench->add_option("--k", bench_args.k)->required();
    bench->add_option("--reps", bench_args.reps, "repetitions per spec (0 = header only)");
    bench->add_option("--seed", bench_args.seed);
    bench->add_option("--arc-test", bench_arc_test, "bitset | delta");
    bench->add_flag("--serial", bench_serial);

    // guess-experiment
    dcoc::cli::GuessArgs guess_args;
    std::string x_csv, x0_csv;
    bool guess_serial = false;
    auto* guess = app.add_subcommand("guess-experiment",
                                     "Monte-Carlo component guessing vs the exact probability");
    guess->add_option("file", guess_args.file)->required();
    guess->add_option("--x", x_csv, "reference solution X (comma-separated)");
    guess->add_option("--x0", x0_csv, "anchor set X0 (comma-separated)");
    guess->add_option("--ell", guess_args.ell)->required();
    guess->add_option("--trials", guess_args.trials);
    guess->add_option("--seed", guess_args.seed);
    guess->add_flag("--serial", guess_serial);

    CLI11_PARSE(app, argc, argv);
    apply_threads(threads);
    const std::string echo = join_argv(argc, argv);

    std::string command = "unknown";
    try {
        if (gen->parsed()) {
            // gen writes --out itself (edge list to the file, report to stdout)
            command = "gen";
            gen_args.out_file = out_path;
            gen_args.argv_echo = echo;
            return dcoc::cli::cmd_gen(gen_args, std::cout);
        }
        OutStream out(out_path);
        if (solve->parsed()) {
            command = "solve";
            if (solve_arc_test != "bitset" && solve_arc_test != "delta")
                dcoc::fail("bad_args", "unknown arc test '" + solve_arc_test + "'");
            solve_args.arc_test = solve_arc_test == "delta" ? dcoc::solver::ArcTest::delta
                                                            : dcoc::solver::ArcTest::bitset;
            solve_args.parallel = !solve_serial;
            solve_args.argv_echo = echo;
            return dcoc::cli::cmd_solve(solve_args, out.get());
        }
        if (verify->parsed()) {
            command = "verify";
            verify_args.witness = dcoc::cli::parse_vertex_list(witness_csv);
            verify_args.argv_echo = echo;
            return dcoc::cli::cmd_verify(verify_args, out.get());
        }
        if (oracle->parsed()) {
            command = "oracle";
            oracle_args.parallel = !oracle_serial;
            oracle_args.argv_echo = echo;
            return dcoc::cli::cmd_oracle(oracle_args, out.get());
        }
        if (bench->parsed()) {
            command = "bench";
            if (bench_arc_test != "bitset" && bench_arc_test != "delta")
                dcoc::fail("bad_args", "unknown arc test '" + bench_arc_test + "'");
            bench_args.arc_test = bench_arc_test == "delta" ? dcoc::solver::ArcTest::delta
                                                            : dcoc::solver::ArcTest::bitset;
            bench_args.parallel = !bench_serial;
            return dcoc::cli::cmd_bench(bench_args, out.get());
        }
        if (guess->parsed()) {
            command = "guess-experiment";
            guess_args.x = dcoc::cli::parse_vertex_list(x_csv);
            guess_args.x0 = dcoc::cli::parse_vertex_list(x0_csv);
            guess_args.parallel = !guess_serial;
            guess_args.argv_echo = echo;
            return dcoc::cli::cmd_guess(guess_args, out.get());
        }
    } catch (const dcoc::Error& e) {
        dcoc::cli::write_error(std::cout, command, e);
        std::cerr << "error (" << e.code() << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        dcoc::cli::write_error(std::cout, command, dcoc::Error("internal", e.what()));
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
