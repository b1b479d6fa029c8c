#include <homproof/refute.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace homproof
{
    RefuteError::RefuteError(RefuteErrc code, const string & message, std::optional<OddClosedWalk> target_walk) :
        std::runtime_error(message),
        _code(code),
        _target_walk(std::move(target_walk))
    {
    }

    namespace
    {
        /// Input-clause helpers over a shared builder.
        struct Inputs
        {
            ProofBuilder & builder;
            VarMap vars;

            auto at_least_one(Vertex v) -> int
            {
                Clause c;
                for (int u = 0; u < vars.n_target; ++u)
                    c.push_back(vars.index(v, u));
                return builder.input(c);
            }

            auto conflict(Vertex v1, Vertex u1, Vertex v2, Vertex u2) -> int
            {
                return builder.input({-vars.index(v1, u1), -vars.index(v2, u2)});
            }
        };

        auto positives(const Clause & c) -> vector<Lit>
        {
            vector<Lit> result;
            std::copy_if(c.begin(), c.end(), std::back_inserter(result), [](Lit l) { return l > 0; });
            return result;
        }
    }

    auto refutation_step_bound(long k, long m) -> long
    {
        return 4 * k * m * m + 4 * m + 4;
    }

    auto plan_refutation(const Graph & source, const Graph & target, const OddClosedWalk & walk,
        const Bipartition & partition) -> RefutationPlan
    {
        if (target.n() < 1)
            throw RefuteError(RefuteErrc::TargetEmpty, "target graph has no vertices");
        if (! is_valid_odd_walk(source, walk))
            throw RefuteError(RefuteErrc::InvalidWitness, "walk is not an odd closed walk of the source graph");
        if (! is_valid_bipartition(target, partition))
            throw RefuteError(RefuteErrc::InvalidWitness, "partition is not a bipartition of the target graph");

        RefutationPlan plan;
        plan.cycle = reduce_to_simple_cycle(walk);
        plan.partition = partition;
        plan.vars = VarMap{source.n(), target.n()};

        const auto & c = plan.cycle.verts;
        int k = plan.cycle.length();
        int m = target.n();
        vector<vector<Vertex>> members(2);
        for (Vertex u = 0; u < m; ++u)
            members[static_cast<int>(partition.side[u])].push_back(u);
        auto same_side = [&](Vertex u) -> const vector<Vertex> & { return members[static_cast<int>(partition.side[u])]; };

        ProofBuilder builder;
        Inputs inputs{builder, plan.vars};
        const auto & x = plan.vars;

        // Each transfer clause resolves away the same-side colours of c_{i+1}.
        plan.transfer.assign(k - 1, vector<int>(m, 0));
        for (int i = 0; i + 1 < k; ++i)
            for (Vertex u = 0; u < m; ++u) {
                int id = inputs.at_least_one(c[i + 1]);
                for (Vertex w : same_side(u))
                    id = builder.derive(id, inputs.conflict(c[i], u, c[i + 1], w), x.index(c[i + 1], w));
                plan.transfer[i][u] = id;
            }

        plan.chain.assign(m, {});
        plan.unit.assign(m, 0);
        for (Vertex u = 0; u < m; ++u) {
            int current = plan.transfer[0][u];
            plan.chain[u].push_back(current);
            for (int j = 1; j + 1 < k; ++j) {
                auto open = positives(builder.clause(current));
                if (open.empty())
                    break;
                for (Lit l : open)
                    current = builder.derive(current, plan.transfer[j][x.decode(l).second], l);
                plan.chain[u].push_back(current);
            }

            // The closing edge {c_{k-1}, c_0} pairs each remaining colour with u on the same side.
            for (Lit l : positives(builder.clause(current)))
                current = builder.derive(current, inputs.conflict(c[0], u, c[k - 1], x.decode(l).second), l);
            plan.unit[u] = current;
        }

        int current = inputs.at_least_one(c[0]);
        for (Vertex u = 0; u < m; ++u)
            current = builder.derive(current, plan.unit[u], x.index(c[0], u));

        plan.proof = std::move(builder).take();
        return plan;
    }

    auto refute(const Graph & source, const Graph & target, const OddClosedWalk & walk, const Bipartition & partition)
        -> ResolutionProof
    {
        return plan_refutation(source, target, walk, partition).proof;
    }

    auto refute_edgeless(const Graph & source, const Graph & target, Edge edge) -> ResolutionProof
    {
        auto [v1, v2] = edge;
        if (target.num_edges() != 0)
            throw RefuteError(RefuteErrc::PreconditionViolated, "target graph has edges");
        if (v1 < 0 || v2 < 0 || v1 >= source.n() || v2 >= source.n() || ! source.adjacent(v1, v2))
            throw RefuteError(RefuteErrc::PreconditionViolated, "given pair is not an edge of the source graph");

        ProofBuilder builder;
        VarMap vars{source.n(), target.n()};
        Inputs inputs{builder, vars};
        int m = target.n();

        vector<int> units;
        for (Vertex u1 = 0; u1 < m; ++u1) {
            int id = inputs.at_least_one(v2);
            for (Vertex u2 = 0; u2 < m; ++u2)
                id = builder.derive(id, inputs.conflict(v1, u1, v2, u2), vars.index(v2, u2));
            units.push_back(id);
        }

        int current = inputs.at_least_one(v1);
        for (Vertex u1 = 0; u1 < m; ++u1)
            current = builder.derive(current, units[u1], vars.index(v1, u1));
        return std::move(builder).take();
    }

    auto pipeline(const Graph & source, const Graph & target) -> Certificate
    {
        auto target_witness = is_bipartite(target);
        if (auto * odd = std::get_if<OddClosedWalk>(&target_witness))
            throw RefuteError(RefuteErrc::TargetNotBipartite, "target graph is not bipartite", *odd);
        const auto & target_split = std::get<Bipartition>(target_witness);

        if (source.num_edges() == 0)
            return PositiveCertificate{Homomorphism{vector<Vertex>(source.n(), 0)}};

        if (target.num_edges() == 0)
            return NegativeCertificate{refute_edgeless(source, target, source.edges().front()), 0};

        auto source_witness = is_bipartite(source);
        if (auto * split = std::get_if<Bipartition>(&source_witness)) {
            auto [a, b] = target.edges().front();
            auto h = compose(hom_from_bipartition(source, *split), Homomorphism{{a, b}});
            if (! check_homomorphism(source, target, h))
                throw std::logic_error("bipartition map failed the homomorphism check");
            return PositiveCertificate{std::move(h)};
        }

        const auto & walk = std::get<OddClosedWalk>(source_witness);
        return NegativeCertificate{refute(source, target, walk, target_split), walk.length()};
    }

    auto write_witness_map(const Homomorphism & h) -> string
    {
        std::ostringstream out;
        for (std::size_t v = 0; v < h.map.size(); ++v)
            out << "h " << v + 1 << ' ' << h.map[v] + 1 << '\n';
        return out.str();
    }

    auto parse_witness_map(string_view text, int n_source) -> Homomorphism
    {
        Homomorphism h;
        h.map.assign(n_source, -1);
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;
            std::istringstream words{line};
            string tag, rest;
            long v = 0, u = 0;
            if (! (words >> tag >> v >> u) || tag != "h" || (words >> rest))
                throw GraphError(GraphErrc::MalformedLine, "bad map line " + std::to_string(lineno), lineno);
            if (v < 1 || v > n_source || u < 1)
                throw GraphError(GraphErrc::VertexOutOfRange, "vertex out of range on line " + std::to_string(lineno), lineno);
            if (h.map[v - 1] != -1)
                throw GraphError(GraphErrc::MalformedLine, "vertex mapped twice on line " + std::to_string(lineno), lineno);
            h.map[v - 1] = static_cast<Vertex>(u - 1);
        }
        if (std::find(h.map.begin(), h.map.end(), -1) != h.map.end())
            throw GraphError(GraphErrc::DimensionMismatch, "map does not cover every source vertex");
        return h;
    }
}
