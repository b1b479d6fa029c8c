#include <homproof/bench.hh>

#include <sstream>
#include <stdexcept>

using std::string;
using std::vector;

namespace homproof
{
    auto gen_php(int pigeons, int holes) -> CnfInstance
    {
        if (pigeons < 1 || holes < 1)
            throw std::invalid_argument("pigeonhole instance needs at least one pigeon and one hole");

        auto p = [holes](int i, int j) { return i * holes + j + 1; };
        CnfInstance cnf{pigeons * holes};
        for (int i = 0; i < pigeons; ++i) {
            Clause some;
            for (int j = 0; j < holes; ++j)
                some.push_back(p(i, j));
            cnf.add_clause(std::move(some));
        }
        for (int i = 0; i < pigeons; ++i)
            for (int j = 0; j < holes; ++j)
                for (int j2 = j + 1; j2 < holes; ++j2)
                    cnf.add_clause({-p(i, j), -p(i, j2)});
        for (int j = 0; j < holes; ++j)
            for (int i = 0; i < pigeons; ++i)
                for (int i2 = i + 1; i2 < pigeons; ++i2)
                    cnf.add_clause({-p(i, j), -p(i2, j)});
        return cnf;
    }

    auto bench_php(int n_min, int n_max, std::optional<std::chrono::milliseconds> budget) -> BenchReport
    {
        if (n_min < 1 || n_max < n_min)
            throw std::invalid_argument("bench range must satisfy 1 <= from <= to");

        BenchReport report;
        auto start = std::chrono::steady_clock::now();
        for (int n = n_min; n <= n_max; ++n) {
            auto cnf = gen_php(n + 1, n);
            DpllOptions options;
            if (budget)
                options.deadline = start + *budget;
            auto solved = dpll_solve(cnf, options);
            if (solved.status == SolveStatus::Aborted) {
                report.budget_exceeded_at = n;
                break;
            }
            report.rows.push_back(BenchRow{n + 1, n, cnf.num_vars(), cnf.size(), solved.status, solved.stats});
        }
        return report;
    }

    auto bench_csv_header() -> string
    {
        return "pigeons,holes,vars,clauses,result,decisions,conflicts,propagations,time_ms";
    }

    auto to_csv_row(const BenchRow & row) -> string
    {
        std::ostringstream out;
        out << row.pigeons << ',' << row.holes << ',' << row.num_vars << ',' << row.num_clauses << ','
            << (row.result == SolveStatus::Sat ? "SAT" : row.result == SolveStatus::Unsat ? "UNSAT" : "UNKNOWN") << ','
            << to_csv_row(row.stats);
        return out.str();
    }

    auto to_csv(const vector<BenchRow> & rows) -> string
    {
        string out = bench_csv_header() + "\n";
        for (const auto & row : rows)
            out += to_csv_row(row) + "\n";
        return out;
    }
}
