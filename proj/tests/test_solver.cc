#include "support.hh"

#include <homproof/cnf.hh>
#include <homproof/proof.hh>
#include <homproof/solver.hh>

#include <doctest.h>

#include <random>

using namespace homproof;
using namespace homproof::testing;

TEST_CASE("dpll_solve on small cases")
{
    CHECK(dpll_solve(CnfInstance{1, {{1}, {-1}}}).status == SolveStatus::Unsat);
    CHECK(dpll_solve(CnfInstance{2, {{}}}).status == SolveStatus::Unsat);
    CHECK(dpll_solve(CnfInstance{0}).status == SolveStatus::Sat);

    auto sat = dpll_solve(CnfInstance{3, {{-1, 2}, {-2, 3}, {1}}});
    REQUIRE(sat.status == SolveStatus::Sat);
    CHECK(sat.model == std::vector<bool>{false, true, true, true});
}

TEST_CASE("dpll_solve on graph encodings")
{
    auto [cnf, vars] = encode(graphs::cycle(4), graphs::complete(2));
    auto result = dpll_solve(cnf);
    REQUIRE(result.status == SolveStatus::Sat);
    CHECK(check_homomorphism(graphs::cycle(4), graphs::complete(2), decode_assignment(vars, result.model)));

    CHECK(dpll_solve(encode(graphs::complete(4), graphs::complete(3)).cnf).status == SolveStatus::Unsat);
}

TEST_CASE("dpll branches lowest variable first, true first")
{
    // Nothing forces a value: the first decision sets 1 true and everything follows.
    auto result = dpll_solve(CnfInstance{3, {{1, 2, 3}, {-1, -2}}});
    REQUIRE(result.status == SolveStatus::Sat);
    CHECK(result.model == std::vector<bool>{false, true, false, true});
    CHECK(result.stats.decisions == 2);
    CHECK(result.stats.conflicts == 0);
    CHECK(result.stats.propagations == 1);

    // 1 true conflicts, flip to false, then 2 is forced.
    auto flipped = dpll_solve(CnfInstance{3, {{-1, 2}, {-1, -2}, {1, 3}}});
    REQUIRE(flipped.status == SolveStatus::Sat);
    CHECK(flipped.stats.conflicts == 1);
    CHECK(flipped.model[1] == false);
    CHECK(flipped.model[3] == true);
}

TEST_CASE("dpll agrees with truth tables on random formulas")
{
    std::mt19937 rng{42};
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto cnf = random_cnf(rng, n, static_cast<int>(rng() % (4 * n + 2)), 3);
        auto result = dpll_solve(cnf);
        bool oracle = brute_force_sat(cnf).has_value();
        CHECK((result.status == SolveStatus::Sat) == oracle);
    }
}

TEST_CASE("dpll statistics are deterministic")
{
    auto cnf = encode(graphs::complete(6), graphs::complete(5)).cnf;
    auto a = dpll_solve(cnf), b = dpll_solve(cnf);
    CHECK(a.stats.decisions == b.stats.decisions);
    CHECK(a.stats.conflicts == b.stats.conflicts);
    CHECK(a.stats.propagations == b.stats.propagations);
    CHECK(a.stats.conflicts > 0);
    CHECK(stats_csv_header() == "decisions,conflicts,propagations,time_ms");
}

TEST_CASE("dpll honours a deadline")
{
    DpllOptions options;
    options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds{1};
    auto result = dpll_solve(encode(graphs::complete(10), graphs::complete(9)).cnf, options);
    CHECK(result.status == SolveStatus::Aborted);
}

TEST_CASE("saturate on the worked examples")
{
    CnfInstance units{1, {{1}, {-1}}};
    auto proof = saturate(units);
    REQUIRE(proof);
    CHECK(proof->size() == 3);
    CHECK(check_refutation(units, *proof).ok);

    auto k32 = encode(graphs::complete(3), graphs::complete(2)).cnf;
    auto k32_proof = saturate(k32);
    REQUIRE(k32_proof);
    CHECK(check_refutation(k32, *k32_proof).ok);

    auto k22 = encode(graphs::complete(2), graphs::complete(2)).cnf;
    CHECK_FALSE(saturate(k22));
    CHECK(dpll_solve(k22).status == SolveStatus::Sat);

    CnfInstance with_empty{2, {{1}, {}}};
    auto trivial = saturate(with_empty);
    REQUIRE(trivial);
    CHECK(trivial->size() == 1);
    CHECK(check_refutation(with_empty, *trivial).ok);
}

TEST_CASE("saturate budget")
{
    CnfInstance wide{14, {{1, 14}, {-1}}};
    CHECK_THROWS_AS(saturate(wide), SolverError);
    CHECK_THROWS_AS(saturate(wide, 40), SolverError);
    CHECK_FALSE(saturate(wide, 14));
}

TEST_CASE("saturate and dpll agree, and saturation proofs check")
{
    std::mt19937 rng{99};
    int refuted = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto cnf = random_cnf(rng, n, static_cast<int>(rng() % (5 * n + 2)), 3);
        auto proof = saturate(cnf);
        bool unsat = dpll_solve(cnf).status == SolveStatus::Unsat;
        CHECK(proof.has_value() == unsat);
        if (proof) {
            ++refuted;
            CHECK(check_refutation(cnf, *proof).ok);
            CHECK(dpll_solve(cnf).status == SolveStatus::Unsat);
        }
    }
    CHECK(refuted > 20);
}

TEST_CASE("saturate is deterministic")
{
    auto cnf = encode(graphs::complete(3), graphs::complete(2)).cnf;
    CHECK(saturate(cnf) == saturate(cnf));
}
