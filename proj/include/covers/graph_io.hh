// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <covers/graph.hh>

#include <iosfwd>
#include <map>
#include <string>

namespace covers
{
    // Plain-text graph format, one directive per line:
    //
    //   n <count>        vertex count, must appear before any edge (exactly once)
    //   e <u> <v>        undirected edge, 0-based endpoints
    //   l <v> <tag>      optional vertex label (tag is a single token)
    //   # ...            comment; blank lines are ignored
    //
    // Serialization is canonical: the `n` line, then `e` lines sorted by
    // (min, max) endpoint, then `l` lines sorted by vertex.  Parsing a
    // serialized graph and serializing again is byte-identical.
    auto parse_graph(std::istream & in) -> graph;
    auto parse_graph(const std::string & text) -> graph;
    auto serialize_graph(const graph & g) -> std::string;

    // JSON mirror of the same data: {"n": int, "edges": [[u,v],...],
    // "labels": {"v": tag, ...}} with the same canonical ordering.
    auto parse_graph_json(const std::string & text) -> graph;
    auto serialize_graph_json(const graph & g) -> std::string;

    // Reads either format: a payload whose first non-space byte is '{' is
    // treated as JSON, anything else as the plain-text format.
    auto parse_graph_auto(const std::string & text) -> graph;

    // Graphviz export.  If a colouring is supplied the vertices are filled
    // from a small palette indexed by colour value.
    auto to_dot(const graph & g, const std::map<int, int> & colouring = {})
        -> std::string;
}
