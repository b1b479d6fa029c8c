#include <homproof/cnf.hh>

#include <algorithm>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace homproof
{
    auto literal_less(Lit a, Lit b) -> bool
    {
        auto va = var_of(a), vb = var_of(b);
        if (va != vb)
            return va < vb;
        return a < b;
    }

    auto canonical_clause(Clause c) -> Clause
    {
        std::sort(c.begin(), c.end(), literal_less);
        c.erase(std::unique(c.begin(), c.end()), c.end());
        return c;
    }

    auto is_tautology(const Clause & c) -> bool
    {
        // Canonical order places -v directly before +v.
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (c[i] == -c[i + 1])
                return true;
        return false;
    }

    auto ClauseHash::operator()(const Clause & c) const noexcept -> std::size_t
    {
        std::size_t h = c.size();
        for (auto l : c)
            h ^= static_cast<std::size_t>(static_cast<unsigned>(l)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    CnfError::CnfError(CnfErrc code, const string & message, long line) :
        std::runtime_error(message),
        _code(code),
        _line(line)
    {
    }

    CnfInstance::CnfInstance(int num_vars) :
        _num_vars(num_vars)
    {
        if (num_vars < 0)
            throw CnfError(CnfErrc::InvalidClause, "negative variable count");
    }

    CnfInstance::CnfInstance(int num_vars, const vector<Clause> & clauses) :
        CnfInstance(num_vars)
    {
        for (const auto & c : clauses)
            add_clause(c);
    }

    auto CnfInstance::add_clause(Clause c) -> bool
    {
        for (auto l : c)
            if (l == 0 || var_of(l) > _num_vars)
                throw CnfError(CnfErrc::InvalidClause, "literal " + std::to_string(l) + " out of range");
        c = canonical_clause(std::move(c));
        if (is_tautology(c))
            throw CnfError(CnfErrc::InvalidClause, "tautological clause");
        if (! _index.insert(c).second)
            return false;
        _clauses.push_back(std::move(c));
        return true;
    }

    auto canonical_order(const CnfInstance & cnf) -> CnfInstance
    {
        auto clauses = cnf.clauses();
        std::sort(clauses.begin(), clauses.end(), [](const Clause & a, const Clause & b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), literal_less);
        });
        return CnfInstance{cnf.num_vars(), clauses};
    }

    auto same_clause_set(const CnfInstance & a, const CnfInstance & b) -> bool
    {
        if (a.num_vars() != b.num_vars() || a.size() != b.size())
            return false;
        return std::all_of(a.clauses().begin(), a.clauses().end(), [&](const Clause & c) { return b.contains(c); });
    }

    auto encode(const Graph & source, const Graph & target) -> EncodedInstance
    {
        VarMap vars{source.n(), target.n()};
        CnfInstance cnf{vars.num_vars()};
        int m = target.n();

        for (int v = 0; v < source.n(); ++v) {
            Clause some;
            for (int u = 0; u < m; ++u)
                some.push_back(vars.index(v, u));
            cnf.add_clause(std::move(some));
        }

        for (int v = 0; v < source.n(); ++v)
            for (int u1 = 0; u1 < m; ++u1)
                for (int u2 = u1 + 1; u2 < m; ++u2)
                    cnf.add_clause({-vars.index(v, u1), -vars.index(v, u2)});

        // Both orientations of each edge are visited; add_clause drops the repeats.
        for (auto [a, b] : source.edges())
            for (auto [v1, v2] : {Edge{a, b}, Edge{b, a}})
                for (int u1 = 0; u1 < m; ++u1)
                    for (int u2 = 0; u2 < m; ++u2)
                        if (! target.adjacent(u1, u2))
                            cnf.add_clause({-vars.index(v1, u1), -vars.index(v2, u2)});

        return {std::move(cnf), vars};
    }

    auto RelStructure::from_graph(const Graph & g) -> RelStructure
    {
        RelStructure s;
        s.universe = g.n();
        Relation edge{2, {}};
        for (auto [i, j] : g.edges()) {
            edge.tuples.insert({i, j});
            edge.tuples.insert({j, i});
        }
        s.relations.emplace("E", std::move(edge));
        return s;
    }

    auto encode_csp(const RelStructure & source, const RelStructure & target) -> EncodedInstance
    {
        if (target.universe <= 0)
            throw CnfError(CnfErrc::EmptyTarget, "target structure has an empty universe");
        if (source.universe <= 0)
            throw CnfError(CnfErrc::VocabularyMismatch, "source structure has an empty universe");
        if (source.relations.size() != target.relations.size())
            throw CnfError(CnfErrc::VocabularyMismatch, "structures have different vocabularies");
        for (const auto & [name, rel] : source.relations) {
            auto it = target.relations.find(name);
            if (it == target.relations.end() || it->second.arity != rel.arity)
                throw CnfError(CnfErrc::VocabularyMismatch, "relation " + name + " missing or of different arity in target");
            for (const auto * s : {&source, &target})
                for (const auto & t : s->relations.at(name).tuples)
                    if (static_cast<int>(t.size()) != rel.arity
                        || std::any_of(t.begin(), t.end(), [&](int x) { return x < 0 || x >= s->universe; }))
                        throw CnfError(CnfErrc::VocabularyMismatch, "relation " + name + " has a malformed tuple");
        }

        VarMap vars{source.universe, target.universe};
        CnfInstance cnf{vars.num_vars()};
        int m = target.universe;

        for (int v = 0; v < source.universe; ++v) {
            Clause some;
            for (int u = 0; u < m; ++u)
                some.push_back(vars.index(v, u));
            cnf.add_clause(std::move(some));
        }
        for (int v = 0; v < source.universe; ++v)
            for (int u1 = 0; u1 < m; ++u1)
                for (int u2 = u1 + 1; u2 < m; ++u2)
                    cnf.add_clause({-vars.index(v, u1), -vars.index(v, u2)});

        for (const auto & [name, rel] : source.relations) {
            const auto & forbidden_from = target.relations.at(name).tuples;
            for (const auto & vs : rel.tuples) {
                // Odometer over all target tuples of this arity.
                vector<int> us(rel.arity, 0);
                while (true) {
                    if (! forbidden_from.contains(us)) {
                        Clause c;
                        for (int i = 0; i < rel.arity; ++i)
                            c.push_back(-vars.index(vs[i], us[i]));
                        cnf.add_clause(std::move(c));
                    }
                    int pos = rel.arity - 1;
                    while (pos >= 0 && ++us[pos] == m)
                        us[pos--] = 0;
                    if (pos < 0)
                        break;
                }
            }
        }

        return {std::move(cnf), vars};
    }

    auto decode_assignment(const VarMap & vars, const vector<bool> & model) -> Homomorphism
    {
        Homomorphism h;
        h.map.assign(vars.n_source, -1);
        for (int v = 0; v < vars.n_source; ++v)
            for (int u = 0; u < vars.n_target; ++u) {
                auto x = static_cast<std::size_t>(vars.index(v, u));
                if (x < model.size() && model[x]) {
                    h.map[v] = u;
                    break;
                }
            }
        if (std::find(h.map.begin(), h.map.end(), -1) != h.map.end())
            throw CnfError(CnfErrc::InvalidClause, "model leaves a source vertex uncoloured");
        return h;
    }

    auto write_dimacs(const CnfInstance & cnf) -> string
    {
        std::ostringstream out;
        out << "p cnf " << cnf.num_vars() << ' ' << cnf.size() << '\n';
        for (const auto & c : cnf.clauses()) {
            for (auto l : c)
                out << l << ' ';
            out << "0\n";
        }
        return out.str();
    }

    auto parse_dimacs(string_view text) -> CnfInstance
    {
        std::istringstream in{string{text}};
        string line;
        long lineno = 0;
        bool have_header = false;
        long declared_clauses = 0, seen_clauses = 0;
        CnfInstance cnf;

        auto fail = [&](const string & why) -> CnfError {
            return CnfError(CnfErrc::MalformedDimacs, "line " + std::to_string(lineno) + ": " + why, lineno);
        };

        while (std::getline(in, line)) {
            ++lineno;
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;

            std::istringstream words{line};
            if (line[first] == 'p') {
                string p, fmt;
                long nv = -1;
                string extra;
                if (have_header || ! (words >> p >> fmt >> nv >> declared_clauses) || fmt != "cnf" || nv < 0
                    || declared_clauses < 0 || (words >> extra))
                    throw fail("bad header");
                have_header = true;
                cnf = CnfInstance{static_cast<int>(nv)};
                continue;
            }
            if (! have_header)
                throw fail("clause before header");

            Clause c;
            string token;
            bool terminated = false;
            while (words >> token) {
                if (terminated)
                    throw fail("literal after terminating 0");
                long lit = 0;
                std::size_t used = 0;
                try {
                    lit = std::stol(token, &used);
                }
                catch (const std::exception &) {
                    throw fail("bad literal '" + token + "'");
                }
                if (used != token.size())
                    throw fail("bad literal '" + token + "'");
                if (lit == 0) {
                    terminated = true;
                    continue;
                }
                if (lit > cnf.num_vars() || -lit > cnf.num_vars())
                    throw fail("variable " + std::to_string(lit < 0 ? -lit : lit) + " exceeds declared " + std::to_string(cnf.num_vars()));
                c.push_back(static_cast<Lit>(lit));
            }
            if (! terminated)
                throw fail("clause not terminated by 0");
            ++seen_clauses;
            try {
                cnf.add_clause(std::move(c));
            }
            catch (const CnfError & e) {
                throw fail(e.what());
            }
        }

        if (! have_header)
            throw CnfError(CnfErrc::MalformedDimacs, "missing 'p cnf' header", lineno);
        if (seen_clauses != declared_clauses)
            throw CnfError(CnfErrc::MalformedDimacs,
                "header declares " + std::to_string(declared_clauses) + " clauses, found " + std::to_string(seen_clauses), lineno);
        return cnf;
    }
}
