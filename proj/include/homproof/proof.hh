#ifndef HOMPROOF_PROOF_HH
#define HOMPROOF_PROOF_HH

#include <homproof/cnf.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace homproof
{
    enum class ResolveErrc
    {
        PivotMissing,
        PivotSameSign
    };

    class ResolveError : public std::runtime_error
    {
        ResolveErrc _code;

    public:
        ResolveError(ResolveErrc code, const std::string & message);

        auto code() const noexcept -> ResolveErrc { return _code; }
    };

    /// Resolvent of two clauses on \p pivot (a variable, not a literal).
    /// The result is canonical and may be tautological.
    auto resolve(const Clause & c1, const Clause & c2, int pivot) -> Clause;

    struct ProofStep
    {
        int id = 0;
        Clause clause;
        /// Empty for input steps, otherwise exactly two earlier ids.
        std::vector<int> antecedents;
        /// Zero for input steps.
        int pivot = 0;

        auto is_input() const noexcept -> bool { return antecedents.empty(); }

        friend auto operator==(const ProofStep &, const ProofStep &) -> bool = default;
    };

    struct ResolutionProof
    {
        std::vector<ProofStep> steps;

        auto size() const noexcept -> std::size_t { return steps.size(); }
        auto num_derived() const -> std::size_t;

        friend auto operator==(const ResolutionProof &, const ResolutionProof &) -> bool = default;
    };

    enum class CheckReason
    {
        NotAnInputClause,
        BadResolvent,
        NoEmptyClause,
        DanglingAntecedent,
        BadStepId
    };

    auto to_string(CheckReason r) -> std::string;

    struct CheckResult
    {
        bool ok = false;
        int step_id = 0;
        CheckReason reason = CheckReason::NoEmptyClause;
        std::string message;
        /// Ids of accepted steps whose resolvent is tautological.
        std::vector<int> tautology_warnings;

        explicit operator bool() const noexcept { return ok; }
    };

    auto check_refutation(const CnfInstance & cnf, const ResolutionProof & proof) -> CheckResult;

    /// True iff no step is used as an antecedent more than once.
    auto is_tree_like(const ResolutionProof & proof) -> bool;

    /**
     * Appends steps while keeping one id per distinct clause, so that
     * re-deriving a clause returns the id it already has.
     */
    class ProofBuilder
    {
        ResolutionProof _proof;
        std::unordered_map<Clause, int, ClauseHash> _ids;

    public:
        /// Input step for a clause (canonicalised); reuses an existing id.
        auto input(const Clause & c) -> int;

        /// Resolves steps \p a and \p b on \p pivot; reuses an existing id
        /// if the resolvent is already present.
        auto derive(int a, int b, int pivot) -> int;

        auto clause(int id) const -> const Clause & { return _proof.steps[id - 1].clause; }
        auto proof() const & -> const ResolutionProof & { return _proof; }
        auto take() && -> ResolutionProof { return std::move(_proof); }
    };

    class TraceError : public std::runtime_error
    {
        long _line;

    public:
        TraceError(const std::string & message, long line);

        auto line() const noexcept -> long { return _line; }
    };

    auto write_trace(const ResolutionProof & proof) -> std::string;

    /**
     * Parses the trace format. Syntax and id ordering are enforced here;
     * the pivot of each derived step is recomputed from its antecedents
     * and left at zero when no clashing variable reproduces the stated
     * clause, so that check_refutation reports the step.
     */
    auto parse_trace(std::string_view text, const CnfInstance & cnf) -> ResolutionProof;
}

#endif
