#ifndef HOMPROOF_CNF_HH
#define HOMPROOF_CNF_HH

#include <homproof/graph.hh>

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace homproof
{
    /// DIMACS-style literal: +v or -v, v >= 1.
    using Lit = int;

    /// Canonical form: ascending by variable, negative before positive, no duplicates.
    using Clause = std::vector<Lit>;

    inline auto var_of(Lit l) -> int { return l < 0 ? -l : l; }

    auto literal_less(Lit a, Lit b) -> bool;
    auto canonical_clause(Clause c) -> Clause;
    auto is_tautology(const Clause & c) -> bool;

    struct ClauseHash
    {
        auto operator()(const Clause & c) const noexcept -> std::size_t;
    };

    using ClauseSet = std::unordered_set<Clause, ClauseHash>;

    enum class CnfErrc
    {
        EmptyTarget,
        VocabularyMismatch,
        MalformedDimacs,
        InvalidClause
    };

    class CnfError : public std::runtime_error
    {
        CnfErrc _code;
        long _line;

    public:
        CnfError(CnfErrc code, const std::string & message, long line = -1);

        auto code() const noexcept -> CnfErrc { return _code; }
        auto line() const noexcept -> long { return _line; }
    };

    /**
     * A clause sequence over variables 1..num_vars. Clauses are stored in
     * canonical form; tautologies, out-of-range literals and duplicate
     * clauses are rejected on insertion.
     */
    class CnfInstance
    {
        int _num_vars = 0;
        std::vector<Clause> _clauses;
        ClauseSet _index;

    public:
        CnfInstance() = default;
        explicit CnfInstance(int num_vars);
        CnfInstance(int num_vars, const std::vector<Clause> & clauses);

        /// Canonicalises and appends; returns false (and does nothing) if
        /// the clause is already present.
        auto add_clause(Clause c) -> bool;

        auto num_vars() const noexcept -> int { return _num_vars; }
        auto clauses() const noexcept -> const std::vector<Clause> & { return _clauses; }
        auto size() const noexcept -> std::size_t { return _clauses.size(); }
        auto contains(const Clause & canonical) const -> bool { return _index.contains(canonical); }

        friend auto operator==(const CnfInstance & a, const CnfInstance & b) -> bool
        {
            return a._num_vars == b._num_vars && a._clauses == b._clauses;
        }
    };

    /// Same clauses, sorted lexicographically under literal_less.
    auto canonical_order(const CnfInstance & cnf) -> CnfInstance;

    /// Order-insensitive comparison of the clause sets (and variable counts).
    auto same_clause_set(const CnfInstance & a, const CnfInstance & b) -> bool;

    /// x_{v,u} <-> v * n_target + u + 1.
    struct VarMap
    {
        int n_source = 0;
        int n_target = 0;

        auto index(int v, int u) const -> int { return v * n_target + u + 1; }
        auto decode(int var) const -> std::pair<int, int> { return {(var - 1) / n_target, (var - 1) % n_target}; }
        auto num_vars() const -> int { return n_source * n_target; }
    };

    struct EncodedInstance
    {
        CnfInstance cnf;
        VarMap vars;
    };

    /**
     * Clauses whose models are exactly the homomorphisms source -> target:
     * at-least-one colour per source vertex, at-most-one colour per source
     * vertex, and for every source edge a conflict clause per pair of
     * target vertices that are not adjacent (including equal pairs).
     */
    auto encode(const Graph & source, const Graph & target) -> EncodedInstance;

    struct Relation
    {
        int arity = 0;
        std::set<std::vector<int>> tuples;
    };

    struct RelStructure
    {
        int universe = 0;
        std::map<std::string, Relation> relations;

        /// Edge relation stored symmetrically, under the name "E".
        static auto from_graph(const Graph & g) -> RelStructure;
    };

    /// General relational form: for each relation and each source tuple,
    /// one all-negative clause per target tuple outside the relation.
    auto encode_csp(const RelStructure & source, const RelStructure & target) -> EncodedInstance;

    /// Reads the map out of a model (indexed by variable, entry 0 unused).
    /// Throws CnfError if some source vertex has no true colour variable.
    auto decode_assignment(const VarMap & vars, const std::vector<bool> & model) -> Homomorphism;

    auto write_dimacs(const CnfInstance & cnf) -> std::string;

    /// One clause per line, each terminated by a single trailing 0.
    auto parse_dimacs(std::string_view text) -> CnfInstance;
}

#endif
