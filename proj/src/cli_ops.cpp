#include "dcoc/cli_ops.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dcoc/generators.hpp"
#include "dcoc/guess.hpp"
#include "dcoc/instance.hpp"
#include "dcoc/io.hpp"
#include "dcoc/oracle.hpp"
#include "dcoc/scc.hpp"

namespace dcoc::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string hex_digest(uint64_t digest) {
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << digest;
    return ss.str();
}

json input_block(const std::string& path, const Digraph& d) {
    return json{{"path", path},
                {"n", d.n()},
                {"m", d.arc_count()},
                {"semicomplete", is_semicomplete(d)},
                {"digest", hex_digest(edge_list_digest(d))}};
}

json sorted_vertices(const VertexSet& x) {
    return json(x.to_vector()); // for_each yields ascending order
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

const char* arc_test_name(solver::ArcTest t) {
    return t == solver::ArcTest::bitset ? "bitset" : "delta";
}

} // namespace

void write_error(std::ostream& out, const std::string& command, const Error& e) {
    json doc{{"schema", "v1"},
             {"command", command},
             {"error", json{{"code", e.code()}, {"message", e.what()}}}};
    emit(out, doc);
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    if (csv.empty()) return out;
    std::istringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            fail("bad_args", "bad vertex id '" + item + "' in list");
        }
    }
    return out;
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    auto t0 = Clock::now();
    Digraph d = read_edge_list_file(args.file);
    double parse_ms = ms_since(t0);

    json doc{{"schema", "v1"}, {"command", "solve"}};
    if (!args.argv_echo.empty()) doc["argv"] = args.argv_echo;
    doc["input"] = input_block(args.file, d);
    doc["params"] = json{{"ell", args.ell},
                         {"k", args.k},
                         {"engine", args.engine},
                         {"arc_test", arc_test_name(args.arc_test)}};

    bool yes = false;
    if (args.engine == "oracle") {
        Instance inst(std::move(d), args.ell, args.k);
        auto res = oracle::optimal_coc(inst.digraph, args.ell, args.k, args.parallel);
        yes = res.has_value();
        doc["decision"] = yes ? "yes" : "no";
        if (yes) {
            doc["cost"] = res->optimum;
            doc["witness"] = sorted_vertices(res->witness);
        }
        doc["timing_ms"] = json{{"parse", parse_ms}, {"total", ms_since(t0)}};
    } else if (args.engine == "semicomplete") {
        Instance inst(std::move(d), args.ell, args.k);
        solver::BuildOptions opts{args.arc_test, args.parallel};
        solver::SolveStats stats;
        auto sol = solver::solve(inst, opts, &stats);
        yes = sol.has_value();
        doc["decision"] = yes ? "yes" : "no";
        if (yes) {
            doc["cost"] = sol->cost;
            doc["witness"] = sorted_vertices(sol->x);
            json path = json::array();
            for (const solver::ValidTriple& tr : sol->path_triples)
                path.push_back(json{{"t", tr.t}, {"y", sorted_vertices(tr.y)}, {"s", sorted_vertices(tr.s)}});
            doc["path"] = std::move(path);
        }
        doc["timing_ms"] = json{{"parse", parse_ms},
                                {"enumerate", stats.enumerate_ms},
                                {"arcs", stats.arcs_ms},
                                {"dp", stats.dp_ms},
                                {"reconstruct", stats.reconstruct_ms},
                                {"total", ms_since(t0)}};
        long long triples_total = 0;
        for (size_t c : stats.triples_per_level) triples_total += static_cast<long long>(c);
        doc["counters"] = json{{"levels", stats.triples_per_level.size()},
                               {"triples_per_level", stats.triples_per_level},
                               {"triples_total", triples_total},
                               {"arcs_generated", stats.arcs_generated},
                               {"arcs_pruned", stats.arcs_pruned},
                               {"shortcut", stats.shortcut}};
    } else {
        fail("bad_args", "unknown engine '" + args.engine + "'");
    }

    emit(out, doc);
    return yes ? 0 : 1;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    Digraph d = read_edge_list_file(args.file);
    for (int v : args.witness)
        if (v < 0 || v >= d.n())
            fail("bad_witness", "witness vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(d.n() - 1));
    VertexSet x = VertexSet::from(d.n(), args.witness);
    Instance inst(std::move(d), args.ell, args.k);
    int value = mco(inst.digraph, x);
    bool yes = verify_solution(inst, x);

    json doc{{"schema", "v1"},
             {"command", "verify"},
             {"input", input_block(args.file, inst.digraph)},
             {"params", json{{"ell", args.ell}, {"k", args.k}}},
             {"witness", sorted_vertices(x)},
             {"witness_size", x.count()},
             {"mco", value},
             {"decision", yes ? "yes" : "no"}};
    emit(out, doc);
    return yes ? 0 : 1;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
    Digraph d = read_edge_list_file(args.file);
    int cap = args.cap < 0 ? d.n() : args.cap;
    auto res = oracle::optimal_coc(d, args.ell, cap, args.parallel);

    json doc{{"schema", "v1"},
             {"command", "oracle"},
             {"input", input_block(args.file, d)},
             {"params", json{{"ell", args.ell}, {"cap", cap}}},
             {"decision", res ? "yes" : "no"}};
    if (res) {
        doc["optimum"] = res->optimum;
        doc["witness"] = sorted_vertices(res->witness);
    }
    emit(out, doc);
    return res ? 0 : 1;
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
    Digraph d = gen::generate(args.spec, args.seed);
    if (args.out_file.empty()) {
        write_edge_list(out, d);
        return 0;
    }
    write_edge_list_file(args.out_file, d);
    json doc{{"schema", "v1"},
             {"command", "gen"},
             {"spec", args.spec},
             {"seed", args.seed},
             {"n", d.n()},
             {"m", d.arc_count()},
             {"digest", hex_digest(edge_list_digest(d))},
             {"out", args.out_file}};
    emit(out, doc);
    return 0;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    out << "spec,digest,n,m,rep,ell,k,arc_test,decision,cost,parse_ms,enumerate_ms,arcs_ms,dp_ms,"
           "reconstruct_ms,total_ms,triples_total,triples_max_level,arcs_generated,arcs_pruned\n";
    for (const std::string& spec : args.specs) {
        for (int rep = 0; rep < args.reps; ++rep) {
            auto t0 = Clock::now();
            Digraph d = gen::generate(spec, args.seed);
            double parse_ms = ms_since(t0);
            uint64_t digest = edge_list_digest(d);
            int n = d.n();
            long long m = d.arc_count();

            Instance inst(std::move(d), args.ell, args.k);
            solver::BuildOptions opts{args.arc_test, args.parallel};
            solver::SolveStats stats;
            auto t1 = Clock::now();
            auto sol = solver::solve(inst, opts, &stats);
            double total_ms = parse_ms + ms_since(t1);

            long long triples_total = 0;
            size_t triples_max = 0;
            for (size_t c : stats.triples_per_level) {
                triples_total += static_cast<long long>(c);
                triples_max = std::max(triples_max, c);
            }
            out << spec << ',' << hex_digest(digest) << ',' << n << ',' << m << ',' << rep << ','
                << args.ell << ',' << args.k << ',' << arc_test_name(args.arc_test) << ','
                << (sol ? "yes" : "no") << ',' << (sol ? std::to_string(sol->cost) : std::string{})
                << ',' << parse_ms << ',' << stats.enumerate_ms << ',' << stats.arcs_ms << ','
                << stats.dp_ms << ',' << stats.reconstruct_ms << ',' << total_ms << ','
                << triples_total << ',' << triples_max << ',' << stats.arcs_generated << ','
                << stats.arcs_pruned << '\n';
        }
    }
    return 0;
}

int cmd_guess(const GuessArgs& args, std::ostream& out) {
    Digraph d = read_edge_list_file(args.file);
    for (int v : args.x)
        if (v < 0 || v >= d.n()) fail("bad_args", "X vertex " + std::to_string(v) + " out of range");
    for (int v : args.x0)
        if (v < 0 || v >= d.n()) fail("bad_args", "X0 vertex " + std::to_string(v) + " out of range");
    VertexSet x = VertexSet::from(d.n(), args.x);
    VertexSet x0 = VertexSet::from(d.n(), args.x0);

    guess::TrialReport rep = guess::run_trials(d, x, x0, args.ell, args.trials, args.seed,
                                               args.parallel, true);

    std::ostringstream rational;
    rational << rep.exact;

    json doc{{"schema", "v1"},
             {"command", "guess-experiment"},
             {"input", input_block(args.file, d)},
             {"params", json{{"ell", args.ell},
                             {"x", json(args.x)},
                             {"x0", json(args.x0)},
                             {"trials", args.trials},
                             {"seed", args.seed}}},
             {"exact", json{{"rational", rational.str()},
                            {"decimal", rep.exact.convert_to<double>()}}}};
    if (args.trials > 0) {
        doc["successes"] = rep.successes;
        doc["frequency"] = rep.frequency;
        doc["sigma"] = rep.sigma;
        doc["within_3_sigma"] = rep.within_3_sigma;
        doc["fix_check_failures"] = rep.fix_check_failures;
    }
    emit(out, doc);
    if (args.trials == 0) return 0;
    return rep.within_3_sigma && rep.fix_check_failures == 0 ? 0 : 1;
}

} // namespace dcoc::cli
