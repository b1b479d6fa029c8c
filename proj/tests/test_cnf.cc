#include "support.hh"

#include <homproof/cnf.hh>
#include <homproof/solver.hh>

#include <doctest.h>

#include <set>

using namespace homproof;
using namespace homproof::testing;

namespace
{
    using LiteralSet = std::set<int>;

    /// Literal transcription of the three clause families of the encoding, as a set of literal sets.
    auto definition_clauses(const Graph & g, const Graph & h) -> std::set<LiteralSet>
    {
        auto x = [&](int v, int u) { return v * h.n() + u + 1; };
        std::set<LiteralSet> out;
        for (int v = 0; v < g.n(); ++v) {
            LiteralSet some;
            for (int u = 0; u < h.n(); ++u)
                some.insert(x(v, u));
            out.insert(some);
            for (int u1 = 0; u1 < h.n(); ++u1)
                for (int u2 = 0; u2 < h.n(); ++u2)
                    if (u1 != u2)
                        out.insert({-x(v, u1), -x(v, u2)});
        }
        for (int v1 = 0; v1 < g.n(); ++v1)
            for (int v2 = 0; v2 < g.n(); ++v2)
                if (g.adjacent(v1, v2))
                    for (int u1 = 0; u1 < h.n(); ++u1)
                        for (int u2 = 0; u2 < h.n(); ++u2)
                            if (! h.adjacent(u1, u2))
                                out.insert({-x(v1, u1), -x(v2, u2)});
        return out;
    }

    auto as_sets(const CnfInstance & cnf) -> std::set<LiteralSet>
    {
        std::set<LiteralSet> out;
        for (const auto & c : cnf.clauses())
            out.insert(LiteralSet(c.begin(), c.end()));
        return out;
    }

    auto cnf_error(auto && f) -> std::optional<CnfErrc>
    {
        try {
            f();
        }
        catch (const CnfError & e) {
            return e.code();
        }
        return std::nullopt;
    }
}

TEST_CASE("clause canonical form")
{
    CHECK(canonical_clause({3, -1, 2, 3, 1}) == Clause{-1, 1, 2, 3});
    CHECK(is_tautology(canonical_clause({3, -1, 2, 1})));
    CHECK_FALSE(is_tautology({-1, 2, 3}));
    CHECK(literal_less(-2, 2));
    CHECK(literal_less(2, -3));
}

TEST_CASE("CnfInstance rejects bad clauses and drops duplicates")
{
    CnfInstance cnf{3};
    CHECK(cnf.add_clause({2, 1}));
    CHECK_FALSE(cnf.add_clause({1, 2, 1}));
    CHECK(cnf.size() == 1);
    CHECK(cnf_error([&] { cnf.add_clause({1, -1}); }) == CnfErrc::InvalidClause);
    CHECK(cnf_error([&] { cnf.add_clause({4}); }) == CnfErrc::InvalidClause);
    CHECK(cnf_error([&] { cnf.add_clause({0}); }) == CnfErrc::InvalidClause);
}

TEST_CASE("VarMap is a bijection")
{
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) {
            VarMap vars{n, m};
            std::set<int> seen;
            for (int v = 0; v < n; ++v)
                for (int u = 0; u < m; ++u) {
                    int x = vars.index(v, u);
                    CHECK(x >= 1);
                    CHECK(x <= n * m);
                    CHECK(vars.decode(x) == std::pair{v, u});
                    seen.insert(x);
                }
            CHECK(static_cast<int>(seen.size()) == n * m);
        }
}

TEST_CASE("encode(K4, K3) has 12 variables and 4 + 12 + 18 clauses")
{
    auto [cnf, vars] = encode(graphs::complete(4), graphs::complete(3));
    CHECK(cnf.num_vars() == 12);
    CHECK(vars.num_vars() == 12);

    auto oracle = definition_clauses(graphs::complete(4), graphs::complete(3));
    CHECK(oracle.size() == 34);
    CHECK(cnf.size() == 34);
    CHECK(as_sets(cnf) == oracle);

    // family order: at-least-one, at-most-one, edge conflicts
    for (int i = 0; i < 4; ++i)
        CHECK(cnf.clauses()[i].size() == 3);
    CHECK(cnf.clauses()[4] == Clause{-1, -2});
    CHECK(cnf.clauses()[16] == Clause{-1, -4});
}

TEST_CASE("encode matches the definition on assorted pairs")
{
    std::vector<Graph> gs{graphs::cycle(5), graphs::petersen(), graphs::path(3), graphs::edgeless(2), graphs::wheel(5)};
    std::vector<Graph> hs{graphs::complete(2), graphs::cycle(4), graphs::star(3), graphs::edgeless(3), graphs::complete(1)};
    for (const auto & g : gs)
        for (const auto & h : hs)
            CHECK(as_sets(encode(g, h).cnf) == definition_clauses(g, h));
}

TEST_CASE("encode of a single vertex into K2")
{
    auto [cnf, vars] = encode(Graph{}, graphs::complete(2));
    CHECK(cnf.num_vars() == 2);
    CHECK(cnf.clauses() == std::vector<Clause>{{1, 2}, {-1, -2}});
}

TEST_CASE("encode(K2, K2) is satisfied by x00 and x11")
{
    auto [cnf, vars] = encode(graphs::complete(2), graphs::complete(2));
    std::uint32_t assignment = (1u << (vars.index(0, 0) - 1)) | (1u << (vars.index(1, 1) - 1));
    for (const auto & c : cnf.clauses())
        CHECK(eval_clause(c, assignment));

    auto solved = dpll_solve(cnf);
    REQUIRE(solved.status == SolveStatus::Sat);
    CHECK(decode_assignment(vars, solved.model).map == std::vector{0, 1});
}

TEST_CASE("encode is deterministic")
{
    auto a = encode(graphs::petersen(), graphs::cycle(6));
    auto b = encode(graphs::petersen(), graphs::cycle(6));
    CHECK(a.cnf.clauses() == b.cnf.clauses());
}

TEST_CASE("encode_csp reproduces encode for symmetric edge relations")
{
    std::vector<Graph> gs{graphs::complete(3), graphs::cycle(5), graphs::path(4), graphs::edgeless(2)};
    std::vector<Graph> hs{graphs::complete(2), graphs::complete(3), graphs::cycle(4), graphs::edgeless(2)};
    for (const auto & g : gs)
        for (const auto & h : hs) {
            auto direct = encode(g, h);
            auto general = encode_csp(RelStructure::from_graph(g), RelStructure::from_graph(h));
            CHECK(same_clause_set(direct.cnf, general.cnf));
        }
}

TEST_CASE("encode_csp with a unary relation")
{
    RelStructure source{1, {{"R", Relation{1, {{0}}}}}};
    RelStructure target{1, {{"R", Relation{1, {}}}}};
    auto [cnf, vars] = encode_csp(source, target);
    CHECK(cnf.contains(Clause{-1}));
    CHECK(cnf.contains(Clause{1}));
    CHECK(dpll_solve(cnf).status == SolveStatus::Unsat);

    RelStructure empty_source{1, {{"R", Relation{1, {}}}}};
    CHECK(dpll_solve(encode_csp(empty_source, target).cnf).status == SolveStatus::Sat);
}

TEST_CASE("encode_csp with a ternary relation")
{
    // Source triple (0,1,1) must land on a target triple in the relation.
    RelStructure source{2, {{"T", Relation{3, {{0, 1, 1}}}}}};
    RelStructure target{2, {{"T", Relation{3, {{1, 0, 0}}}}}};
    auto [cnf, vars] = encode_csp(source, target);
    auto model = brute_force_sat(cnf);
    REQUIRE(model);
    auto solved = dpll_solve(cnf);
    REQUIRE(solved.status == SolveStatus::Sat);
    CHECK(decode_assignment(vars, solved.model).map == std::vector{1, 0});

    // Repeated source elements collapse literals: (1,1) via (u,u') with u != u' is
    // already excluded by at-most-one, but the clause itself must be well formed.
    for (const auto & c : cnf.clauses())
        CHECK(c == canonical_clause(c));
}

TEST_CASE("encode_csp errors")
{
    RelStructure a{2, {{"E", Relation{2, {}}}}};
    RelStructure b{2, {{"F", Relation{2, {}}}}};
    RelStructure c{2, {{"E", Relation{3, {}}}}};
    RelStructure empty{0, {{"E", Relation{2, {}}}}};
    CHECK(cnf_error([&] { encode_csp(a, b); }) == CnfErrc::VocabularyMismatch);
    CHECK(cnf_error([&] { encode_csp(a, c); }) == CnfErrc::VocabularyMismatch);
    CHECK(cnf_error([&] { encode_csp(a, empty); }) == CnfErrc::EmptyTarget);
}

TEST_CASE("DIMACS writer is bit-exact and round-trips")
{
    CnfInstance cnf{3, {{1, -2}, {3}, {}}};
    CHECK(write_dimacs(cnf) == "p cnf 3 3\n1 -2 0\n3 0\n0\n");

    auto k43 = encode(graphs::complete(4), graphs::complete(3)).cnf;
    auto text = write_dimacs(k43);
    CHECK(parse_dimacs(text) == k43);
    CHECK(write_dimacs(parse_dimacs(text)) == text);
}

TEST_CASE("parse_dimacs")
{
    auto one = parse_dimacs("c comment\np cnf 2 1\n1 -2 0\n");
    CHECK(one.num_vars() == 2);
    CHECK(one.clauses() == std::vector<Clause>{{1, -2}});

    auto code = [](const char * text) { return cnf_error([&] { parse_dimacs(text); }); };
    CHECK(code("p cnf 2 1\n1 5 0\n") == CnfErrc::MalformedDimacs);
    CHECK(code("p cnf 2 1\n1 0 2 0\n") == CnfErrc::MalformedDimacs);
    CHECK(code("p cnf 2 1\n1 2\n") == CnfErrc::MalformedDimacs);
    CHECK(code("p cnf 2 2\n1 2 0\n") == CnfErrc::MalformedDimacs);
    CHECK(code("1 2 0\n") == CnfErrc::MalformedDimacs);
    CHECK(code("p cnf 2 1\n1 x 0\n") == CnfErrc::MalformedDimacs);
    CHECK(code("p cnf 2 1\n1 -1 0\n") == CnfErrc::MalformedDimacs);

    try {
        parse_dimacs("p cnf 2 2\n1 0\n\n-3 0\n");
        FAIL("expected an error");
    }
    catch (const CnfError & e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("canonical_order sorts clauses")
{
    CnfInstance cnf{3, {{3}, {-1, 2}, {1}, {-1}}};
    CHECK(canonical_order(cnf).clauses() == std::vector<Clause>{{-1}, {-1, 2}, {1}, {3}});
}
