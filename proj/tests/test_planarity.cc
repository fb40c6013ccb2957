// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/graph.hh>
#include <covers/planarity.hh>

#include <doctest.h>

#include <algorithm>

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

    auto grid(int rows, int cols) -> graph
    {
        graph g{rows * cols};
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                if (c + 1 < cols)
                    g.add_edge(r * cols + c, r * cols + c + 1);
                if (r + 1 < rows)
                    g.add_edge(r * cols + c, (r + 1) * cols + c);
            }
        return g;
    }

    auto rebuild(int n, const std::vector<edge> & edges) -> graph
    {
        graph g{n};
        for (auto & [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }
}

TEST_CASE("classic planar graphs")
{
    CHECK(is_planar(make_complete(4)));
    CHECK(is_planar(make_cycle(6)));
    CHECK(is_planar(make_cube()));
    CHECK(is_planar(make_prism()));
    CHECK(is_planar(make_path(10)));
    CHECK(is_planar(make_complete_bipartite(2, 3)));
    CHECK(is_planar(host_graph("k5minus")));
    CHECK(is_planar(host_graph("k4plus")));
    CHECK(is_planar(grid(10, 10)));
    CHECK(is_planar(graph{5}));
}

TEST_CASE("classic non-planar graphs")
{
    CHECK_FALSE(is_planar(make_complete(5)));
    CHECK_FALSE(is_planar(make_complete(6)));
    CHECK_FALSE(is_planar(make_complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(petersen()));
}

TEST_CASE("embeddings verify and have the right face counts")
{
    struct sample
    {
        graph g;
        int faces;
    };
    // connected planar: faces = 2 - vertices + edges
    std::vector<sample> samples;
    samples.push_back({make_cube(), 6});
    samples.push_back({make_prism(), 5});
    samples.push_back({make_complete(4), 4});
    samples.push_back({make_cycle(6), 2});
    samples.push_back({make_path(4), 1});
    samples.push_back({make_complete(2), 1});
    samples.push_back({grid(4, 5), 2 - 20 + 31});
    samples.push_back({host_graph("k5minus"), 2 - 5 + 9});

    for (auto & [g, faces] : samples) {
        auto result = embed_planar(g);
        REQUIRE(result.planar);
        CHECK(verify_rotation(g, result.rotation));
        CHECK(count_faces(g, result.rotation) == faces);
    }
}

TEST_CASE("blocks merge at cut vertices")
{
    // bow tie: two triangles sharing vertex 2
    graph bowtie{5};
    bowtie.add_edge(0, 1);
    bowtie.add_edge(1, 2);
    bowtie.add_edge(0, 2);
    bowtie.add_edge(2, 3);
    bowtie.add_edge(3, 4);
    bowtie.add_edge(2, 4);

    auto result = embed_planar(bowtie);
    REQUIRE(result.planar);
    CHECK(verify_rotation(bowtie, result.rotation));
    CHECK(count_faces(bowtie, result.rotation) == 3);

    // tree with a pendant chain plus a square hanging off it
    graph mixed{7};
    mixed.add_edge(0, 1);
    mixed.add_edge(1, 2);
    mixed.add_edge(2, 3);
    mixed.add_edge(3, 4);
    mixed.add_edge(4, 5);
    mixed.add_edge(5, 2);
    mixed.add_edge(3, 6);
    auto embedded = embed_planar(mixed);
    REQUIRE(embedded.planar);
    CHECK(verify_rotation(mixed, embedded.rotation));
}

TEST_CASE("disconnected graphs embed per component")
{
    graph g{7};   // triangle + triangle + isolated vertex
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);

    auto result = embed_planar(g);
    REQUIRE(result.planar);
    CHECK(verify_rotation(g, result.rotation));
    CHECK(count_faces(g, result.rotation) == 5);   // 2 + 2 + 1
}

TEST_CASE("witnesses are minimal forbidden subdivisions")
{
    SUBCASE("five-clique")
    {
        auto g = make_complete(5);
        auto result = embed_planar(g);
        REQUIRE_FALSE(result.planar);
        CHECK(result.witness.size() == 10);
        CHECK(classify_witness(g.size(), result.witness) == "k5");
    }

    SUBCASE("three by three")
    {
        auto g = make_complete_bipartite(3, 3);
        auto result = embed_planar(g);
        REQUIRE_FALSE(result.planar);
        CHECK(result.witness.size() == 9);
        CHECK(classify_witness(g.size(), result.witness) == "k33");
    }

    SUBCASE("petersen has no degree-four vertex, so its witness is bipartite-type")
    {
        auto g = petersen();
        auto result = embed_planar(g);
        REQUIRE_FALSE(result.planar);
        CHECK(classify_witness(g.size(), result.witness) == "k33");
    }

    SUBCASE("witness edges come from the graph and removal of any one makes it planar")
    {
        auto g = make_complete(6);
        auto result = embed_planar(g);
        REQUIRE_FALSE(result.planar);

        for (auto & e : result.witness)
            CHECK(g.has_edge(e.first, e.second));

        auto w = rebuild(g.size(), result.witness);
        CHECK_FALSE(is_planar(w));
        auto kind = classify_witness(g.size(), result.witness);
        CHECK((kind == "k5" || kind == "k33"));

        for (std::size_t skip = 0; skip < result.witness.size(); ++skip) {
            std::vector<edge> rest;
            for (std::size_t j = 0; j < result.witness.size(); ++j)
                if (j != skip)
                    rest.push_back(result.witness[j]);
            CHECK(is_planar(rebuild(g.size(), rest)));
        }
    }

    SUBCASE("non-planar core inside a larger planar graph")
    {
        // K3,3 on 0..5 plus a planar tail
        auto g = make_complete_bipartite(3, 3);
        graph big{9};
        for (auto & [u, v] : g.edges())
            big.add_edge(u, v);
        big.add_edge(5, 6);
        big.add_edge(6, 7);
        big.add_edge(6, 8);
        auto result = embed_planar(big);
        REQUIRE_FALSE(result.planar);
        CHECK(classify_witness(big.size(), result.witness) == "k33");
    }
}

TEST_CASE("rotation verification rejects wrong data")
{
    auto g = make_complete(4);

    // sorted lists at every vertex force a toroidal face structure on K4
    std::vector<std::vector<int>> sorted_rotation{
        {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    CHECK_FALSE(verify_rotation(g, sorted_rotation));
    CHECK(count_faces(g, sorted_rotation) == 2);

    // wrong shape: not a neighbour ordering
    CHECK_FALSE(verify_rotation(g, {{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}));
    CHECK_FALSE(verify_rotation(g, {{1, 2, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}));
    CHECK_FALSE(verify_rotation(g, {}));
    CHECK_THROWS_AS(count_faces(g, {}), input_error);
}

TEST_CASE("dense prefilter answers without embedding")
{
    // 30 vertices, far more than 3n - 6 edges
    auto g = make_complete(12);
    CHECK_FALSE(is_planar(g));
    auto result = embed_planar(g);
    REQUIRE_FALSE(result.planar);
    auto kind = classify_witness(g.size(), result.witness);
    CHECK((kind == "k5" || kind == "k33"));
}

TEST_CASE("witness classifier plays safe on junk")
{
    // a plain cycle collapses to a triangle and is neither forbidden graph
    auto cycle = make_cycle(8);
    CHECK(classify_witness(8, cycle.edges()) == "");
    CHECK(classify_witness(3, {}) == "");
    CHECK_THROWS_AS(classify_witness(2, {{0, 5}}), input_error);
}
