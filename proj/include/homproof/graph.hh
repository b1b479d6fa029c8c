#ifndef HOMPROOF_GRAPH_HH
#define HOMPROOF_GRAPH_HH

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace homproof
{
    enum class GraphErrc
    {
        LoopEdge,
        VertexOutOfRange,
        MalformedLine,
        MissingHeader,
        DimensionMismatch,
        BudgetExceeded,
        InvalidWitness,
        UnknownGraphName
    };

    class GraphError : public std::runtime_error
    {
        GraphErrc _code;
        long _where;

    public:
        GraphError(GraphErrc code, const std::string & message, long where = -1);

        auto code() const noexcept -> GraphErrc { return _code; }

        /// Line number for parse errors, vertex id for LoopEdge, -1 otherwise.
        auto where() const noexcept -> long { return _where; }
    };

    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Simple undirected loop-free graph on vertices 0..n-1.
     *
     * Edges are kept as a sorted list of pairs (i, j) with i < j, together
     * with an adjacency matrix and sorted neighbour lists for fast queries.
     */
    class Graph
    {
        int _n = 1;
        std::vector<Edge> _edges;
        std::vector<std::uint8_t> _adj;
        std::vector<std::vector<Vertex>> _neighbours;

    public:
        /// Single isolated vertex.
        Graph();

        /// Throws GraphError on loops or out-of-range endpoints; duplicate
        /// edges (in either orientation) are merged.
        Graph(int n, const std::vector<Edge> & edges);

        auto n() const noexcept -> int { return _n; }
        auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
        auto num_edges() const noexcept -> std::size_t { return _edges.size(); }
        auto adjacent(Vertex i, Vertex j) const -> bool { return _adj[static_cast<std::size_t>(i) * _n + j]; }
        auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _neighbours[v]; }

        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a._n == b._n && a._edges == b._edges;
        }
    };

    enum class Side : std::uint8_t
    {
        Left,
        Right
    };

    struct Bipartition
    {
        std::vector<Side> side;

        friend auto operator==(const Bipartition &, const Bipartition &) -> bool = default;
    };

    /// Closed walk c_0 .. c_{k-1}; the closing edge is {c_{k-1}, c_0}.
    struct OddClosedWalk
    {
        std::vector<Vertex> verts;

        auto length() const noexcept -> int { return static_cast<int>(verts.size()); }

        friend auto operator==(const OddClosedWalk &, const OddClosedWalk &) -> bool = default;
    };

    struct Homomorphism
    {
        std::vector<Vertex> map;

        friend auto operator==(const Homomorphism &, const Homomorphism &) -> bool = default;
    };

    using BipartitenessWitness = std::variant<Bipartition, OddClosedWalk>;

    auto parse_graph(std::string_view text) -> Graph;
    auto write_graph(const Graph & g) -> std::string;

    auto is_valid_bipartition(const Graph & g, const Bipartition & b) -> bool;

    /// Odd length, k >= 3, every consecutive pair (and the closing pair) adjacent.
    auto is_valid_odd_walk(const Graph & g, const OddClosedWalk & w) -> bool;

    /**
     * Decides bipartiteness by BFS layering, components in ascending root
     * order. On failure the returned walk runs from the lowest common
     * ancestor down to one endpoint of the offending edge and back up
     * through the other, so it is in fact a simple odd cycle.
     */
    auto is_bipartite(const Graph & g) -> BipartitenessWitness;

    auto check_homomorphism(const Graph & source, const Graph & target, const Homomorphism & h) -> bool;

    inline constexpr double default_search_limit = 1 << 24;

    /// Exhaustive backtracking search. Rejects instances whose nominal
    /// search space target.n()^source.n() exceeds \p limit.
    auto find_homomorphism(const Graph & source, const Graph & target, double limit = default_search_limit)
        -> std::optional<Homomorphism>;

    /// i -> second(first(i)).
    auto compose(const Homomorphism & first, const Homomorphism & second) -> Homomorphism;

    /// Left -> 0, Right -> 1, as a map into K_2.
    auto hom_from_bipartition(const Graph & g, const Bipartition & b) -> Homomorphism;

    auto reduce_to_simple_cycle(const OddClosedWalk & w) -> OddClosedWalk;

    namespace graphs
    {
        auto complete(int n) -> Graph;
        auto cycle(int n) -> Graph;
        auto path(int n) -> Graph;
        auto edgeless(int n) -> Graph;
        auto complete_bipartite(int a, int b) -> Graph;
        /// Centre 0 joined to \p leaves further vertices.
        auto star(int leaves) -> Graph;
        /// Rim cycle on vertices 0..rim-1, hub vertex rim.
        auto wheel(int rim) -> Graph;
        auto petersen() -> Graph;

        /// Graph with n vertices whose edges are the bits of \p mask over
        /// the pairs (i, j), i < j, in lexicographic order.
        auto from_mask(int n, std::uint64_t mask) -> Graph;

        /// Kn, Cn, Pn, En, Sn, Wn, Ka,b and PETERSEN (case-insensitive).
        auto by_name(std::string_view name) -> std::optional<Graph>;
    }
}

#endif
