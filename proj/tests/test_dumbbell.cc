// SPDX-License-Identifier: Apache-2.0

#include <covers/dumbbell.hh>
#include <covers/error.hh>
#include <covers/graph.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace covers;

namespace
{
    auto petersen() -> graph
    {
        graph g{10};
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        return g;
    }

    // union of three random perfect matchings, retried until simple and cubic
    auto random_cubic(std::mt19937 & rng, int n) -> graph
    {
        for (int attempt = 0; attempt < 1000; ++attempt) {
            graph g{n};
            bool clash = false;
            for (int matching = 0; matching < 3 && ! clash; ++matching) {
                std::vector<int> order(n);
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                for (int i = 0; i < n; i += 2) {
                    if (g.has_edge(order[i], order[i + 1])) {
                        clash = true;
                        break;
                    }
                    g.add_edge(order[i], order[i + 1]);
                }
            }
            if (! clash)
                return g;
        }
        throw std::runtime_error{"could not sample a cubic graph"};
    }
}

TEST_CASE("hand colourings certify the classics")
{
    // prism: one triangle per colour
    CHECK_FALSE(check_dumbbell(make_prism(), {0, 0, 0, 1, 1, 1}));

    // cube: split by the first coordinate bit
    std::vector<int> by_bit(8);
    for (int v = 0; v < 8; ++v)
        by_bit[v] = v & 1;
    CHECK_FALSE(check_dumbbell(make_cube(), by_bit));

    // ten-vertex classic: outer ring versus inner star
    std::vector<int> rings(10, 0);
    for (int v = 5; v < 10; ++v)
        rings[v] = 1;
    CHECK_FALSE(check_dumbbell(petersen(), rings));
}

TEST_CASE("violations are reported by kind")
{
    auto skewed = check_dumbbell(make_prism(), {0, 0, 0, 0, 0, 0});
    REQUIRE(skewed.has_value());
    CHECK(skewed->kind == "balance");

    auto thin = check_dumbbell(make_cycle(4), {0, 0, 1, 1});
    REQUIRE(thin.has_value());
    CHECK(thin->kind == "degree");

    CHECK_THROWS_AS(check_dumbbell(make_prism(), {0, 0, 0}), input_error);
    CHECK_THROWS_AS(check_dumbbell(make_prism(), {0, 0, 0, 1, 1, 2}), input_error);
}

TEST_CASE("solver decides the classics")
{
    auto prism = solve_dumbbell(make_prism());
    REQUIRE(prism.status == outcome::found);
    CHECK_FALSE(check_dumbbell(make_prism(), *prism.colouring));

    auto cube = solve_dumbbell(make_cube());
    REQUIRE(cube.status == outcome::found);

    auto classic = solve_dumbbell(petersen());
    REQUIRE(classic.status == outcome::found);
    CHECK_FALSE(check_dumbbell(petersen(), *classic.colouring));

    // complete on four: the lone opposite-colour vertex cannot balance
    CHECK(solve_dumbbell(make_complete(4)).status == outcome::exhausted);

    // bipartite cubic on six: no vertex can find two same-colour neighbours
    CHECK(solve_dumbbell(make_complete_bipartite(3, 3)).status == outcome::exhausted);

    // non-cubic inputs are immediate refusals
    CHECK(solve_dumbbell(make_cycle(6)).status == outcome::exhausted);
    CHECK(solve_dumbbell(graph{4}).status == outcome::exhausted);
    CHECK(solve_dumbbell(graph{0}).status == outcome::found);
}

TEST_CASE("solver and reference agree on random cubic graphs")
{
    std::mt19937 rng{9157};
    int hits = 0, misses = 0;
    for (int instance = 0; instance < 40; ++instance) {
        int n = 8 + 2 * (instance % 3);
        auto g = random_cubic(rng, n);
        auto solved = solve_dumbbell(g);
        REQUIRE(solved.status != outcome::budget_exceeded);
        bool reference = naive_dumbbell_decision(g);
        CHECK((solved.status == outcome::found) == reference);
        if (solved.status == outcome::found) {
            ++hits;
            CHECK_FALSE(check_dumbbell(g, *solved.colouring));
        }
        else
            ++misses;
    }
    CHECK(hits > 0);
    CHECK(misses > 0);
}

TEST_CASE("budgets cut off honestly")
{
    auto g = make_complete_bipartite(3, 3);
    auto tight = solve_dumbbell(g, budget{.nodes = 2, .seconds = 300.0});
    CHECK(tight.status == outcome::budget_exceeded);

    CHECK_THROWS_AS(naive_dumbbell_decision(g, budget{.nodes = 3, .seconds = 300.0}),
                    budget_error);
}
