#ifndef HOMPROOF_BENCH_HH
#define HOMPROOF_BENCH_HH

#include <homproof/cnf.hh>
#include <homproof/solver.hh>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace homproof
{
    /**
     * Pigeonhole clauses for m pigeons and n holes over p_{ij} = i * n + j + 1:
     * every pigeon gets a hole, no pigeon gets two, no hole gets two pigeons.
     * Built directly, not through the graph encoder.
     */
    auto gen_php(int pigeons, int holes) -> CnfInstance;

    struct BenchRow
    {
        int pigeons = 0;
        int holes = 0;
        int num_vars = 0;
        std::size_t num_clauses = 0;
        SolveStatus result = SolveStatus::Aborted;
        SolveStats stats;
    };

    struct BenchReport
    {
        std::vector<BenchRow> rows;
        /// Hole count at which the time budget ran out, if it did.
        std::optional<int> budget_exceeded_at;
    };

    /// Solves PHP(n+1, n) for n in [n_min, n_max], ascending.
    auto bench_php(int n_min, int n_max, std::optional<std::chrono::milliseconds> budget = std::nullopt) -> BenchReport;

    auto bench_csv_header() -> std::string;
    auto to_csv_row(const BenchRow & row) -> std::string;

    /// Header plus one line per row, newline-terminated.
    auto to_csv(const std::vector<BenchRow> & rows) -> std::string;
}

#endif
