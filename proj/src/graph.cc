#include <homproof/graph.hh>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace homproof
{
    GraphError::GraphError(GraphErrc code, const string & message, long where) :
        std::runtime_error(message),
        _code(code),
        _where(where)
    {
    }

    Graph::Graph() :
        Graph(1, {})
    {
    }

    Graph::Graph(int n, const vector<Edge> & edges) :
        _n(n)
    {
        if (n < 1)
            throw GraphError(GraphErrc::VertexOutOfRange, "graph needs at least one vertex");

        _adj.assign(static_cast<std::size_t>(n) * n, 0);
        _neighbours.resize(n);
        for (auto [i, j] : edges) {
            if (i < 0 || j < 0 || i >= n || j >= n)
                throw GraphError(GraphErrc::VertexOutOfRange,
                    "edge {" + std::to_string(i) + "," + std::to_string(j) + "} out of range for n = " + std::to_string(n));
            if (i == j)
                throw GraphError(GraphErrc::LoopEdge, "loop on vertex " + std::to_string(i), i);
            if (i > j)
                std::swap(i, j);
            if (_adj[static_cast<std::size_t>(i) * n + j])
                continue;
            _adj[static_cast<std::size_t>(i) * n + j] = 1;
            _adj[static_cast<std::size_t>(j) * n + i] = 1;
            _edges.emplace_back(i, j);
            _neighbours[i].push_back(j);
            _neighbours[j].push_back(i);
        }
        std::sort(_edges.begin(), _edges.end());
        for (auto & nb : _neighbours)
            std::sort(nb.begin(), nb.end());
    }

    auto parse_graph(string_view text) -> Graph
    {
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;
        optional<int> n;
        vector<Edge> edges;

        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;

            std::istringstream words{line};
            string tag;
            words >> tag;
            if (tag == "p") {
                string kind;
                long nv = -1, ne = -1;
                if (n || ! (words >> kind >> nv >> ne) || kind != "edge" || nv < 1 || ne < 0)
                    throw GraphError(GraphErrc::MalformedLine, "bad header on line " + std::to_string(lineno), lineno);
                n = static_cast<int>(nv);
            }
            else if (tag == "e") {
                if (! n)
                    throw GraphError(GraphErrc::MissingHeader, "edge before 'p edge' header on line " + std::to_string(lineno), lineno);
                long i = 0, j = 0;
                string rest;
                if (! (words >> i >> j) || (words >> rest))
                    throw GraphError(GraphErrc::MalformedLine, "bad edge line " + std::to_string(lineno), lineno);
                if (i < 1 || j < 1 || i > *n || j > *n)
                    throw GraphError(GraphErrc::VertexOutOfRange, "vertex out of range on line " + std::to_string(lineno), lineno);
                if (i == j)
                    throw GraphError(GraphErrc::LoopEdge, "loop on vertex " + std::to_string(i) + " (line " + std::to_string(lineno) + ")", i - 1);
                edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
            }
            else
                throw GraphError(GraphErrc::MalformedLine, "unrecognised line " + std::to_string(lineno), lineno);
        }

        if (! n)
            throw GraphError(GraphErrc::MissingHeader, "missing 'p edge' header");
        return Graph{*n, edges};
    }

    auto write_graph(const Graph & g) -> string
    {
        std::ostringstream out;
        out << "p edge " << g.n() << ' ' << g.num_edges() << '\n';
        for (auto [i, j] : g.edges())
            out << "e " << i + 1 << ' ' << j + 1 << '\n';
        return out.str();
    }

    auto is_valid_bipartition(const Graph & g, const Bipartition & b) -> bool
    {
        if (b.side.size() != static_cast<std::size_t>(g.n()))
            return false;
        return std::all_of(g.edges().begin(), g.edges().end(),
            [&](const Edge & e) { return b.side[e.first] != b.side[e.second]; });
    }

    auto is_valid_odd_walk(const Graph & g, const OddClosedWalk & w) -> bool
    {
        int k = w.length();
        if (k < 3 || k % 2 == 0)
            return false;
        for (auto v : w.verts)
            if (v < 0 || v >= g.n())
                return false;
        for (int i = 0; i < k; ++i)
            if (! g.adjacent(w.verts[i], w.verts[(i + 1) % k]))
                return false;
        return true;
    }

    auto is_bipartite(const Graph & g) -> BipartitenessWitness
    {
        int n = g.n();
        vector<int> depth(n, -1), parent(n, -1);

        for (Vertex root = 0; root < n; ++root) {
            if (depth[root] != -1)
                continue;
            depth[root] = 0;
            std::queue<Vertex> queue;
            queue.push(root);
            while (! queue.empty()) {
                Vertex u = queue.front();
                queue.pop();
                for (Vertex v : g.neighbours(u)) {
                    if (depth[v] == -1) {
                        depth[v] = depth[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    }
                    else if (depth[v] % 2 == depth[u] % 2) {
                        // BFS layers differ by at most one across an edge, so equal parity means equal depth.
                        vector<Vertex> down_u, up_v;
                        Vertex a = u, b = v;
                        while (a != b) {
                            down_u.push_back(a);
                            up_v.push_back(b);
                            a = parent[a];
                            b = parent[b];
                        }
                        OddClosedWalk walk;
                        walk.verts.push_back(a);
                        walk.verts.insert(walk.verts.end(), down_u.rbegin(), down_u.rend());
                        walk.verts.insert(walk.verts.end(), up_v.begin(), up_v.end());
                        return walk;
                    }
                }
            }
        }

        Bipartition result;
        result.side.reserve(n);
        for (int d : depth)
            result.side.push_back(d % 2 == 0 ? Side::Left : Side::Right);
        return result;
    }

    namespace
    {
        auto check_map_dimensions(const Graph & source, const Graph & target, const Homomorphism & h) -> void
        {
            if (h.map.size() != static_cast<std::size_t>(source.n()))
                throw GraphError(GraphErrc::DimensionMismatch,
                    "map has " + std::to_string(h.map.size()) + " entries but source has " + std::to_string(source.n()) + " vertices");
            for (auto u : h.map)
                if (u < 0 || u >= target.n())
                    throw GraphError(GraphErrc::DimensionMismatch, "map value " + std::to_string(u) + " outside target");
        }
    }

    auto check_homomorphism(const Graph & source, const Graph & target, const Homomorphism & h) -> bool
    {
        check_map_dimensions(source, target, h);
        return std::all_of(source.edges().begin(), source.edges().end(),
            [&](const Edge & e) { return target.adjacent(h.map[e.first], h.map[e.second]); });
    }

    auto find_homomorphism(const Graph & source, const Graph & target, double limit) -> optional<Homomorphism>
    {
        double space = std::pow(static_cast<double>(target.n()), static_cast<double>(source.n()));
        if (space > limit)
            throw GraphError(GraphErrc::BudgetExceeded,
                "search space " + std::to_string(target.n()) + "^" + std::to_string(source.n()) + " exceeds limit");

        int n = source.n();
        Homomorphism h;
        h.map.assign(n, -1);

        // Assign vertices in order; only edges to already-assigned (lower) vertices are checked.
        auto extend = [&](auto & self, Vertex v) -> bool {
            if (v == n)
                return true;
            for (Vertex u = 0; u < target.n(); ++u) {
                bool ok = true;
                for (Vertex w : source.neighbours(v)) {
                    if (w >= v)
                        break;
                    if (! target.adjacent(h.map[w], u)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    h.map[v] = u;
                    if (self(self, v + 1))
                        return true;
                }
            }
            h.map[v] = -1;
            return false;
        };

        if (extend(extend, 0))
            return h;
        return std::nullopt;
    }

    auto compose(const Homomorphism & first, const Homomorphism & second) -> Homomorphism
    {
        Homomorphism result;
        result.map.reserve(first.map.size());
        for (auto u : first.map) {
            if (u < 0 || static_cast<std::size_t>(u) >= second.map.size())
                throw GraphError(GraphErrc::DimensionMismatch,
                    "cannot compose: intermediate vertex " + std::to_string(u) + " outside second map's domain");
            result.map.push_back(second.map[u]);
        }
        return result;
    }

    auto hom_from_bipartition(const Graph & g, const Bipartition & b) -> Homomorphism
    {
        if (! is_valid_bipartition(g, b))
            throw GraphError(GraphErrc::InvalidWitness, "side assignment is not a proper bipartition");
        Homomorphism h;
        for (auto s : b.side)
            h.map.push_back(s == Side::Left ? 0 : 1);
        return h;
    }

    auto reduce_to_simple_cycle(const OddClosedWalk & w) -> OddClosedWalk
    {
        // Split at the first repeated vertex; one of the two closed sub-walks is odd.
        vector<Vertex> walk = w.verts;
        bool changed = true;
        while (changed) {
            changed = false;
            int k = static_cast<int>(walk.size());
            for (int j = 1; j < k && ! changed; ++j)
                for (int i = 0; i < j; ++i)
                    if (walk[i] == walk[j]) {
                        vector<Vertex> inner(walk.begin() + i, walk.begin() + j);
                        if ((j - i) % 2 == 1)
                            walk = std::move(inner);
                        else {
                            vector<Vertex> outer(walk.begin(), walk.begin() + i);
                            outer.insert(outer.end(), walk.begin() + j, walk.end());
                            walk = std::move(outer);
                        }
                        changed = true;
                        break;
                    }
        }
        return OddClosedWalk{walk};
    }

    namespace graphs
    {
        auto complete(int n) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    edges.emplace_back(i, j);
            return Graph{n, edges};
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw GraphError(GraphErrc::UnknownGraphName, "cycle needs at least three vertices");
            vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                edges.emplace_back(i, (i + 1) % n);
            return Graph{n, edges};
        }

        auto path(int n) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i + 1 < n; ++i)
                edges.emplace_back(i, i + 1);
            return Graph{n, edges};
        }

        auto edgeless(int n) -> Graph
        {
            return Graph{n, {}};
        }

        auto complete_bipartite(int a, int b) -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j)
                    edges.emplace_back(i, a + j);
            return Graph{a + b, edges};
        }

        auto star(int leaves) -> Graph
        {
            vector<Edge> edges;
            for (int i = 1; i <= leaves; ++i)
                edges.emplace_back(0, i);
            return Graph{leaves + 1, edges};
        }

        auto wheel(int rim) -> Graph
        {
            auto edges = cycle(rim).edges();
            for (int i = 0; i < rim; ++i)
                edges.emplace_back(i, rim);
            return Graph{rim + 1, edges};
        }

        auto petersen() -> Graph
        {
            vector<Edge> edges;
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);
                edges.emplace_back(i, i + 5);
                edges.emplace_back(5 + i, 5 + (i + 2) % 5);
            }
            return Graph{10, edges};
        }

        auto from_mask(int n, std::uint64_t mask) -> Graph
        {
            vector<Edge> edges;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask >> bit & 1)
                        edges.emplace_back(i, j);
            return Graph{n, edges};
        }

        auto by_name(string_view name) -> optional<Graph>
        {
            string upper;
            for (char c : name)
                upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            if (upper == "PETERSEN")
                return petersen();
            if (upper.size() < 2)
                return std::nullopt;

            auto number = [](string_view digits) -> optional<int> {
                if (digits.empty() || digits.size() > 6
                    || ! std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    return std::nullopt;
                return std::stoi(string{digits});
            };

            char kind = upper[0];
            string_view rest = string_view{upper}.substr(1);
            if (kind == 'K') {
                if (auto comma = rest.find(','); comma != string_view::npos) {
                    auto a = number(rest.substr(0, comma)), b = number(rest.substr(comma + 1));
                    if (! a || ! b || *a + *b < 1)
                        return std::nullopt;
                    return complete_bipartite(*a, *b);
                }
            }

            auto k = number(rest);
            if (! k)
                return std::nullopt;
            switch (kind) {
            case 'K': return *k >= 1 ? optional{complete(*k)} : std::nullopt;
            case 'C': return *k >= 3 ? optional{cycle(*k)} : std::nullopt;
            case 'P': return *k >= 1 ? optional{path(*k)} : std::nullopt;
            case 'E': return *k >= 1 ? optional{edgeless(*k)} : std::nullopt;
            case 'S': return *k >= 0 ? optional{star(*k)} : std::nullopt;
            case 'W': return *k >= 3 ? optional{wheel(*k)} : std::nullopt;
            default: return std::nullopt;
            }
        }
    }
}
