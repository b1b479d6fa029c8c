#ifndef HOMPROOF_TESTS_SUPPORT_HH
#define HOMPROOF_TESTS_SUPPORT_HH

// Test-only oracles. None of these go through the code paths they check:
// satisfiability is decided by truth tables, homomorphism existence by
// enumerating every map, and instances come from seeded generators.

#include <homproof/cnf.hh>
#include <homproof/graph.hh>
#include <homproof/interpolation.hh>
#include <homproof/solver.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace homproof::testing
{
    inline auto eval_clause(const Clause & c, std::uint32_t assignment) -> bool
    {
        for (auto l : c)
            if (((assignment >> (var_of(l) - 1)) & 1) == (l > 0 ? 1u : 0u))
                return true;
        return false;
    }

    /// Truth-table satisfiability; bit v-1 of the result is variable v.
    inline auto brute_force_sat(const CnfInstance & cnf) -> std::optional<std::uint32_t>
    {
        if (cnf.num_vars() > 22)
            throw std::invalid_argument("too many variables for a truth table");
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << cnf.num_vars()); ++a) {
            bool all = true;
            for (const auto & c : cnf.clauses())
                if (! eval_clause(c, a)) {
                    all = false;
                    break;
                }
            if (all)
                return a;
        }
        return std::nullopt;
    }

    /// Every map source -> target, as a mixed-radix counter.
    inline auto for_each_map(int n_source, int n_target, const std::function<void(const std::vector<int> &)> & visit) -> void
    {
        std::vector<int> map(n_source, 0);
        while (true) {
            visit(map);
            int pos = n_source - 1;
            while (pos >= 0 && ++map[pos] == n_target)
                map[pos--] = 0;
            if (pos < 0)
                return;
        }
    }

    inline auto preserves_edges(const Graph & g, const Graph & h, const std::vector<int> & map) -> bool
    {
        for (auto [i, j] : g.edges())
            if (! h.adjacent(map[i], map[j]))
                return false;
        return true;
    }

    inline auto brute_force_hom_exists(const Graph & g, const Graph & h) -> bool
    {
        bool found = false;
        for_each_map(g.n(), h.n(), [&](const std::vector<int> & map) { found = found || preserves_edges(g, h, map); });
        return found;
    }

    /// Two-colourability by trying every side assignment.
    inline auto brute_force_bipartite(const Graph & g) -> bool
    {
        for (std::uint32_t a = 0; a < (std::uint32_t{1} << g.n()); ++a) {
            bool ok = true;
            for (auto [i, j] : g.edges())
                if (((a >> i) & 1) == ((a >> j) & 1)) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        }
        return false;
    }

    /// All labelled graphs on n vertices.
    inline auto all_graphs(int n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            result.push_back(graphs::from_mask(n, mask));
        return result;
    }

    inline auto random_cnf(std::mt19937 & rng, int num_vars, int num_clauses, int max_width) -> CnfInstance
    {
        CnfInstance cnf{num_vars};
        std::uniform_int_distribution<int> var(1, num_vars), width(1, max_width), coin(0, 1);
        int attempts = 0;
        while (static_cast<int>(cnf.size()) < num_clauses && attempts++ < 50 * num_clauses) {
            std::set<int> used;
            Clause c;
            int w = width(rng);
            for (int i = 0; i < w; ++i) {
                int v = var(rng);
                if (used.insert(v).second)
                    c.push_back(coin(rng) ? v : -v);
            }
            cnf.add_clause(c);
        }
        return cnf;
    }

    /**
     * Random split instance: variables 1..np are shared, the next nq are
     * A-local and the rest B-local. Clauses are 1-3 literals wide.
     */
    inline auto random_split(std::mt19937 & rng, int np, int nq, int nr, int na, int nb) -> SplitInstance
    {
        SplitInstance s;
        s.cnf = CnfInstance{np + nq + nr};
        for (int v = 1; v <= np; ++v)
            s.p_vars.insert(v);

        auto draw = [&](int local_lo, int local_count) {
            std::uniform_int_distribution<int> width(1, 3), coin(0, 1);
            std::vector<int> pool;
            for (int v = 1; v <= np; ++v)
                pool.push_back(v);
            for (int v = local_lo; v < local_lo + local_count; ++v)
                pool.push_back(v);
            std::shuffle(pool.begin(), pool.end(), rng);
            int w = std::min<int>(width(rng), static_cast<int>(pool.size()));
            Clause c;
            for (int i = 0; i < w; ++i)
                c.push_back(coin(rng) ? pool[i] : -pool[i]);
            return c;
        };

        for (int attempts = 0; static_cast<int>(s.a_clauses.size()) < na && attempts < 100 * na; ++attempts)
            if (s.cnf.add_clause(draw(np + 1, nq)))
                s.a_clauses.push_back(static_cast<int>(s.cnf.size()) - 1);
        for (int attempts = 0; static_cast<int>(s.b_clauses.size()) < nb && attempts < 100 * nb; ++attempts)
            if (s.cnf.add_clause(draw(np + nq + 1, nr)))
                s.b_clauses.push_back(static_cast<int>(s.cnf.size()) - 1);
        return s;
    }

    /// Clauses of one side, restricted by fixing the shared variables to alpha.
    inline auto side_under(const SplitInstance & s, const std::vector<int> & side, const std::map<int, bool> & alpha) -> CnfInstance
    {
        CnfInstance cnf{s.cnf.num_vars()};
        for (int i : side)
            cnf.add_clause(s.cnf.clauses()[i]);
        for (auto [v, b] : alpha)
            cnf.add_clause({b ? v : -v});
        return cnf;
    }

    /// Checks both interpolant implications for every assignment to the shared variables.
    inline auto interpolant_contract_holds(const SplitInstance & s, const Circuit & circuit) -> bool
    {
        std::vector<int> shared;
        auto classes = classify_variables(s);
        for (int v = 1; v <= s.cnf.num_vars(); ++v)
            if (classes[v] == VarClass::Shared)
                shared.push_back(v);

        for (std::uint32_t a = 0; a < (std::uint32_t{1} << shared.size()); ++a) {
            std::map<int, bool> alpha;
            for (std::size_t i = 0; i < shared.size(); ++i)
                alpha[shared[i]] = (a >> i) & 1;
            bool value = eval_circuit(circuit, alpha);
            bool a_sat = dpll_solve(side_under(s, s.a_clauses, alpha)).status == SolveStatus::Sat;
            bool b_sat = dpll_solve(side_under(s, s.b_clauses, alpha)).status == SolveStatus::Sat;
            if (a_sat && ! value)
                return false;
            if (value && b_sat)
                return false;
        }
        return true;
    }
}

#endif
