// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/graph_io.hh>

#include <doctest.h>

using namespace covers;

TEST_CASE("text round trip is byte identical")
{
    graph g{4};
    g.add_edge(2, 3);
    g.add_edge(0, 1);
    g.set_label(2, "left");

    auto text = serialize_graph(g);
    CHECK(text == "n 4\ne 0 1\ne 2 3\nl 2 left\n");
    auto back = parse_graph(text);
    CHECK(back == g);
    CHECK(serialize_graph(back) == text);
}

TEST_CASE("comments and blank lines are ignored")
{
    auto g = parse_graph("# a square\n\nn 4\ne 0 1\n e 1 2\ne 2 3\ne 3 0 # closing\n");
    CHECK(g.edge_count() == 4);
}

TEST_CASE("parse errors carry line numbers")
{
    auto line_of = [](const std::string & text) -> long {
        try {
            parse_graph(text);
        }
        catch (const parse_error & error) {
            return error.line();
        }
        return -1;
    };

    CHECK(line_of("e 0 1\n") == 1);                    // edge before size
    CHECK(line_of("n 3\nn 4\n") == 2);                 // duplicate size
    CHECK(line_of("n 3\ne 0\n") == 2);                 // missing endpoint
    CHECK(line_of("n 3\ne 0 x\n") == 2);               // not an integer
    CHECK(line_of("n 3\nq 0 1\n") == 2);               // unknown directive
    CHECK(line_of("n 3\ne 0 3\n") == 2);               // endpoint out of range
    CHECK(line_of("n 3\ne 1 1\n") == 2);               // loop
    CHECK(line_of("n 3\nl 0\n") == 2);                 // missing tag
    CHECK(line_of("n 3\ne 0 1 2\n") == 2);             // stray token
    CHECK(line_of("") == 1);                           // no size at all
    CHECK(line_of("n -1\n") == 1);                     // negative size
}

TEST_CASE("json round trip")
{
    graph g{3};
    g.add_edge(0, 2);
    g.set_label(0, "a");

    auto text = serialize_graph_json(g);
    auto back = parse_graph_json(text);
    CHECK(back == g);
    CHECK(serialize_graph_json(back) == text);
}

TEST_CASE("json rejects malformed payloads")
{
    CHECK_THROWS_AS(parse_graph_json("{"), parse_error);
    CHECK_THROWS_AS(parse_graph_json("[]"), parse_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), parse_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), parse_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0, 2]]})"), parse_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "labels": {"x": "a"}})"), parse_error);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "labels": {"0": 3}})"), parse_error);
}

TEST_CASE("auto detection picks the right parser")
{
    CHECK(parse_graph_auto("  { \"n\": 2, \"edges\": [[0,1]] }").edge_count() == 1);
    CHECK(parse_graph_auto("n 2\ne 0 1\n").edge_count() == 1);
    CHECK_THROWS_AS(parse_graph_auto("   \n \t"), parse_error);
}

TEST_CASE("dot export lists vertices and edges")
{
    graph g{2};
    g.add_edge(0, 1);
    g.set_label(1, "t");

    auto plain = to_dot(g);
    CHECK(plain.find("graph g {") != std::string::npos);
    CHECK(plain.find("0 -- 1;") != std::string::npos);
    CHECK(plain.find("label=\"1:t\"") != std::string::npos);

    auto coloured = to_dot(g, {{0, 0}, {1, 1}});
    CHECK(coloured.find("fillcolor=") != std::string::npos);
}
