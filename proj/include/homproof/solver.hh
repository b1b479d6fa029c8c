#ifndef HOMPROOF_SOLVER_HH
#define HOMPROOF_SOLVER_HH

#include <homproof/cnf.hh>
#include <homproof/proof.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homproof
{
    struct SolveStats
    {
        std::uint64_t decisions = 0;
        std::uint64_t conflicts = 0;
        std::uint64_t propagations = 0;
        double time_ms = 0.0;
    };

    /// "decisions,conflicts,propagations,time_ms"
    auto stats_csv_header() -> std::string;
    auto to_csv_row(const SolveStats & stats) -> std::string;

    enum class SolveStatus
    {
        Sat,
        Unsat,
        Aborted
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::Aborted;
        /// Indexed by variable; entry 0 unused. Only meaningful when Sat.
        std::vector<bool> model;
        SolveStats stats;
    };

    struct DpllOptions
    {
        /// Give up (status Aborted) once this point is passed.
        std::optional<std::chrono::steady_clock::time_point> deadline;
    };

    /**
     * Plain DPLL: unit propagation to fixpoint over two watched literals,
     * then branch on the lowest-numbered unassigned variable, true first,
     * with chronological backtracking and no learning.
     */
    auto dpll_solve(const CnfInstance & cnf, const DpllOptions & options = {}) -> SolveResult;

    class SolverError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr int default_saturation_budget = 12;
    inline constexpr int max_saturation_budget = 32;

    /**
     * Saturates under resolution (given-clause loop with subsumption over
     * the active set). Returns a refutation rebuilt from the antecedent
     * records of the empty clause, or nullopt if the closure does not
     * contain it. Throws SolverError when num_vars exceeds \p var_budget.
     */
    auto saturate(const CnfInstance & cnf, int var_budget = default_saturation_budget) -> std::optional<ResolutionProof>;
}

#endif
