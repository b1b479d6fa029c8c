#ifndef HOMPROOF_REFUTE_HH
#define HOMPROOF_REFUTE_HH

#include <homproof/cnf.hh>
#include <homproof/graph.hh>
#include <homproof/proof.hh>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace homproof
{
    enum class RefuteErrc
    {
        InvalidWitness,
        TargetEmpty,
        PreconditionViolated,
        TargetNotBipartite
    };

    class RefuteError : public std::runtime_error
    {
        RefuteErrc _code;
        std::optional<OddClosedWalk> _target_walk;

    public:
        RefuteError(RefuteErrc code, const std::string & message, std::optional<OddClosedWalk> target_walk = std::nullopt);

        auto code() const noexcept -> RefuteErrc { return _code; }

        /// Odd walk in the target, for TargetNotBipartite.
        auto target_walk() const noexcept -> const std::optional<OddClosedWalk> & { return _target_walk; }
    };

    /**
     * The refutation of CNF(G, H) for an odd cycle c_0..c_{k-1} in G and a
     * bipartition of H, with the ids of its intermediate clauses:
     *
     *  - transfer[i][u] = {-x(c_i,u)} + {x(c_{i+1},u') : u' on the other side from u}
     *  - chain[u][j]    = {-x(c_0,u)} + {x(c_{j+1},u') : u' on one side}, the
     *                     side flipping with j and equal to side(u) at j = k-2
     *  - unit[u]        = {-x(c_0,u)}
     *
     * A chain may stop early (and become the unit) once it runs out of
     * positive literals, which happens when one side of H is empty.
     */
    struct RefutationPlan
    {
        OddClosedWalk cycle;
        Bipartition partition;
        VarMap vars;
        std::vector<std::vector<int>> transfer;
        std::vector<std::vector<int>> chain;
        std::vector<int> unit;
        ResolutionProof proof;
    };

    /// Accepts any odd closed walk; repeated vertices are first shortcut
    /// to a simple odd cycle, which is what the plan records.
    auto plan_refutation(const Graph & source, const Graph & target, const OddClosedWalk & walk,
        const Bipartition & partition) -> RefutationPlan;

    auto refute(const Graph & source, const Graph & target, const OddClosedWalk & walk, const Bipartition & partition)
        -> ResolutionProof;

    /// Upper bound on the size of refute's output for walk length k and m target vertices.
    auto refutation_step_bound(long k, long m) -> long;

    /// Refutation for an edgeless target, using one source edge.
    auto refute_edgeless(const Graph & source, const Graph & target, Edge edge) -> ResolutionProof;

    struct PositiveCertificate
    {
        Homomorphism map;
    };

    struct NegativeCertificate
    {
        ResolutionProof proof;
        /// Length of the odd walk used, or 0 for the edgeless-target route.
        int walk_length = 0;
    };

    using Certificate = std::variant<PositiveCertificate, NegativeCertificate>;

    /// Decides H-colouring for bipartite H and returns a checkable
    /// certificate either way. Throws TargetNotBipartite otherwise.
    auto pipeline(const Graph & source, const Graph & target) -> Certificate;

    /// `h <v> <u>` per source vertex, 1-based.
    auto write_witness_map(const Homomorphism & h) -> std::string;
    auto parse_witness_map(std::string_view text, int n_source) -> Homomorphism;
}

#endif
