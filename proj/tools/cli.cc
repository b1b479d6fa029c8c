#include "cli.hh"

#include <homproof/bench.hh>
#include <homproof/cnf.hh>
#include <homproof/graph.hh>
#include <homproof/interpolation.hh>
#include <homproof/proof.hh>
#include <homproof/refute.hh>
#include <homproof/solver.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using std::string;
using std::vector;

namespace homproof::cli
{
    namespace
    {
        struct InputFailure : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto read_file(const string & path) -> string
        {
            std::ifstream in{path, std::ios::binary};
            if (! in)
                throw InputFailure("cannot read " + path);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto load_graph(const string & name) -> Graph
        {
            if (std::filesystem::is_regular_file(name))
                return parse_graph(read_file(name));
            if (auto named = graphs::by_name(name))
                return *named;
            throw InputFailure("'" + name + "' is neither a graph file nor a known graph name");
        }

        /// Writes to the file if a path was given, otherwise to out.
        auto emit(const string & path, const string & text, std::ostream & out) -> void
        {
            if (path.empty()) {
                out << text;
                return;
            }
            std::ofstream file{path, std::ios::binary};
            if (! (file << text))
                throw InputFailure("cannot write " + path);
        }

        auto describe_walk(const OddClosedWalk & w) -> string
        {
            string s;
            for (auto v : w.verts)
                s += (s.empty() ? "" : " ") + std::to_string(v + 1);
            return s;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Graph homomorphism encodings, certificates and resolution proofs", "homproof"};
        app.require_subcommand(1);

        string source, target, output, cnf_path, trace_path, split_path;
        int pigeons = 0, holes = 0, from = 4, to = 9;
        long budget_ms = 0;
        int var_budget = default_saturation_budget;
        bool use_saturate = false;

        auto * encode_cmd = app.add_subcommand("encode", "Write CNF(G, H) in DIMACS");
        encode_cmd->add_option("G", source, "source graph file or name")->required();
        encode_cmd->add_option("H", target, "target graph file or name")->required();
        encode_cmd->add_option("-o,--output", output, "output file");

        auto * decide_cmd = app.add_subcommand("decide", "Decide G -> H for bipartite H and print a certificate");
        decide_cmd->add_option("G", source)->required();
        decide_cmd->add_option("H", target)->required();
        decide_cmd->add_option("-o,--output", output, "write the witness map or trace here");

        auto * refute_cmd = app.add_subcommand("refute", "Emit a resolution refutation of CNF(G, H)");
        refute_cmd->add_option("G", source)->required();
        refute_cmd->add_option("H", target)->required();
        refute_cmd->add_option("-o,--output", output, "trace file");

        auto * check_cmd = app.add_subcommand("check", "Check a refutation trace against a DIMACS formula");
        check_cmd->add_option("cnf", cnf_path)->required();
        check_cmd->add_option("trace", trace_path)->required();

        auto * interpolate_cmd = app.add_subcommand("interpolate", "Extract an interpolating circuit");
        interpolate_cmd->add_option("cnf", cnf_path)->required();
        interpolate_cmd->add_option("split", split_path)->required();
        interpolate_cmd->add_option("trace", trace_path)->required();
        interpolate_cmd->add_option("-o,--output", output, "circuit file");

        auto * php_cmd = app.add_subcommand("php", "Write the pigeonhole formula PHP(m, n)");
        php_cmd->add_option("m", pigeons, "pigeons")->required()->check(CLI::PositiveNumber);
        php_cmd->add_option("n", holes, "holes")->required()->check(CLI::PositiveNumber);
        php_cmd->add_option("-o,--output", output, "output file");

        auto * bench_cmd = app.add_subcommand("bench", "Solve PHP(n+1, n) for a range of n and report CSV");
        bench_cmd->add_option("--from", from, "smallest n")->check(CLI::PositiveNumber);
        bench_cmd->add_option("--to", to, "largest n")->check(CLI::PositiveNumber);
        bench_cmd->add_option("--budget-ms", budget_ms, "total time budget in milliseconds (0 = none)")->check(CLI::NonNegativeNumber);
        bench_cmd->add_option("-o,--output", output, "CSV file");

        auto * oracle_cmd = app.add_subcommand("oracle", "Run the DPLL solver, or resolution saturation with --saturate");
        oracle_cmd->add_option("cnf", cnf_path)->required();
        oracle_cmd->add_flag("--saturate", use_saturate, "saturate under resolution and emit a trace");
        oracle_cmd->add_option("--var-budget", var_budget, "maximum variables for --saturate")->check(CLI::Range(1, max_saturation_budget));
        oracle_cmd->add_option("-o,--output", output, "trace file for --saturate");

        vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? Success : Usage;
        }

        try {
            if (encode_cmd->parsed()) {
                emit(output, write_dimacs(encode(load_graph(source), load_graph(target)).cnf), out);
                return Success;
            }

            if (decide_cmd->parsed() || refute_cmd->parsed()) {
                auto g = load_graph(source), h = load_graph(target);
                Certificate certificate;
                try {
                    certificate = pipeline(g, h);
                }
                catch (const RefuteError & e) {
                    err << "error: " << e.what();
                    if (e.target_walk())
                        err << " (odd closed walk: " << describe_walk(*e.target_walk()) << ")";
                    err << '\n';
                    return InvalidInput;
                }

                if (auto * positive = std::get_if<PositiveCertificate>(&certificate)) {
                    if (refute_cmd->parsed()) {
                        err << "G is H-colourable; no refutation exists\n" << write_witness_map(positive->map);
                        return Success;
                    }
                    out << "POSITIVE\n";
                    emit(output, write_witness_map(positive->map), out);
                    return Success;
                }

                const auto & negative = std::get<NegativeCertificate>(certificate);
                if (decide_cmd->parsed())
                    out << "NEGATIVE\n";
                emit(output, write_trace(negative.proof), out);
                return Negative;
            }

            if (check_cmd->parsed()) {
                auto cnf = parse_dimacs(read_file(cnf_path));
                auto proof = parse_trace(read_file(trace_path), cnf);
                auto result = check_refutation(cnf, proof);
                for (int id : result.tautology_warnings)
                    err << "warning: step " << id << " derives a tautology\n";
                if (! result) {
                    out << "FAIL " << to_string(result.reason) << ' ' << result.message << '\n';
                    return CheckFailed;
                }
                out << "OK " << proof.size() << " steps\n";
                return Success;
            }

            if (interpolate_cmd->parsed()) {
                auto cnf = parse_dimacs(read_file(cnf_path));
                auto split = parse_split(read_file(split_path), cnf);
                auto proof = parse_trace(read_file(trace_path), cnf);
                try {
                    emit(output, write_circuit(interpolate(split, proof)), out);
                }
                catch (const SplitError & e) {
                    err << "error: " << e.what() << '\n';
                    return CheckFailed;
                }
                return Success;
            }

            if (php_cmd->parsed()) {
                emit(output, write_dimacs(gen_php(pigeons, holes)), out);
                return Success;
            }

            if (bench_cmd->parsed()) {
                if (to < from) {
                    err << "error: --to must be at least --from\n";
                    return Usage;
                }
                std::optional<std::chrono::milliseconds> budget;
                if (budget_ms > 0)
                    budget = std::chrono::milliseconds{budget_ms};
                auto report = bench_php(from, to, budget);
                emit(output, to_csv(report.rows), out);
                if (report.budget_exceeded_at) {
                    err << "budget exceeded at n = " << *report.budget_exceeded_at << "; CSV is partial\n";
                    return CheckFailed;
                }
                return Success;
            }

            if (oracle_cmd->parsed()) {
                auto cnf = parse_dimacs(read_file(cnf_path));
                if (use_saturate) {
                    std::optional<ResolutionProof> proof;
                    try {
                        proof = saturate(cnf, var_budget);
                    }
                    catch (const SolverError & e) {
                        err << "error: " << e.what() << '\n';
                        return InvalidInput;
                    }
                    if (! proof) {
                        out << "s SATISFIABLE\n";
                        return Success;
                    }
                    out << "s UNSATISFIABLE\n";
                    emit(output, write_trace(*proof), out);
                    return Negative;
                }

                auto result = dpll_solve(cnf);
                out << (result.status == SolveStatus::Sat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
                if (result.status == SolveStatus::Sat) {
                    out << 'v';
                    for (int v = 1; v <= cnf.num_vars(); ++v)
                        out << ' ' << (result.model[v] ? v : -v);
                    out << " 0\n";
                }
                out << "c " << stats_csv_header() << "\nc " << to_csv_row(result.stats) << '\n';
                return result.status == SolveStatus::Sat ? Success : Negative;
            }
        }
        catch (const InputFailure & e) {
            err << "error: " << e.what() << '\n';
            return InvalidInput;
        }
        catch (const GraphError & e) {
            err << "error: " << e.what() << '\n';
            return InvalidInput;
        }
        catch (const CnfError & e) {
            err << "error: " << e.what() << '\n';
            return InvalidInput;
        }
        catch (const TraceError & e) {
            err << "error: " << e.what() << '\n';
            return InvalidInput;
        }
        catch (const SplitError & e) {
            err << "error: " << e.what() << '\n';
            return InvalidInput;
        }

        return Usage;
    }
}
