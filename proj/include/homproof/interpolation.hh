#ifndef HOMPROOF_INTERPOLATION_HH
#define HOMPROOF_INTERPOLATION_HH

#include <homproof/cnf.hh>
#include <homproof/proof.hh>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace homproof
{
    /// A clause set split into A(p, q) and B(p, r) by clause index (0-based).
    struct SplitInstance
    {
        CnfInstance cnf;
        std::set<int> p_vars;
        std::vector<int> a_clauses;
        std::vector<int> b_clauses;
    };

    enum class VarClass
    {
        Shared,
        ALocal,
        BLocal
    };

    enum class SplitErrc
    {
        MixedClause,
        BadPartition,
        SplitInvalid,
        NotARefutation,
        UnboundInput,
        MalformedFile
    };

    class SplitError : public std::runtime_error
    {
        SplitErrc _code;
        long _index;

    public:
        SplitError(SplitErrc code, const std::string & message, long index = -1);

        auto code() const noexcept -> SplitErrc { return _code; }

        /// Clause index, variable, or line number depending on the code.
        auto index() const noexcept -> long { return _index; }
    };

    struct SplitCheck
    {
        bool ok = true;
        SplitErrc code = SplitErrc::MixedClause;
        /// Offending clause index.
        int clause = -1;

        explicit operator bool() const noexcept { return ok; }
    };

    /**
     * The a/b indices must partition the clauses, and no variable outside
     * p may occur in both an A clause and a B clause. On failure, names the
     * lowest-indexed clause containing such a variable.
     */
    auto validate_split(const SplitInstance & s) -> SplitCheck;

    /// Per variable (index 0 unused). Variables that occur in no clause count as shared.
    auto classify_variables(const SplitInstance & s) -> std::vector<VarClass>;

    enum class GateKind
    {
        Input,
        Const,
        Not,
        And,
        Or
    };

    struct Gate
    {
        GateKind kind = GateKind::Const;
        /// Variable for Input, 0/1 for Const, first operand otherwise.
        int a = 0;
        /// Second operand of And/Or.
        int b = -1;

        friend auto operator==(const Gate &, const Gate &) -> bool = default;
    };

    /// Gates in topological order; operands refer to earlier gate indices.
    struct Circuit
    {
        std::vector<Gate> gates;
        int output = -1;

        friend auto operator==(const Circuit &, const Circuit &) -> bool = default;
    };

    /// Gate count is at most 4 * proof steps + 2 * |p| + 2.
    auto interpolate(const SplitInstance & s, const ResolutionProof & proof) -> Circuit;

    auto eval_circuit(const Circuit & c, const std::map<int, bool> & alpha) -> bool;

    /// `g <id> <kind> <in1> [<in2>]` lines then `out <id>`; ids are 1-based.
    auto write_circuit(const Circuit & c) -> std::string;
    auto parse_circuit(std::string_view text) -> Circuit;

    /// `p-vars: ...`, `a: ...`, `b: ...` with 1-based clause indices.
    auto write_split(const SplitInstance & s) -> std::string;
    auto parse_split(std::string_view text, const CnfInstance & cnf) -> SplitInstance;
}

#endif
