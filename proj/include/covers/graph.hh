// SPDX-License-Identifier: Apache-2.0
// Simple undirected graphs on vertices 0..n-1 with a canonical edge order.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace covers
{
    using edge = std::pair<int, int>;

    // An undirected simple graph.  Edges are stored with first < second and
    // kept sorted lexicographically, so two equal graphs serialise to
    // byte-identical files.  Optional string tags may be attached to
    // vertices; they are carried through serialisation but ignored by all
    // algorithms.
    class graph
    {
    public:
        graph() = default;

        explicit graph(int size);

        auto size() const -> int { return _size; }

        auto edge_count() const -> int { return int(_edges.size()); }

        // Adds an edge, ignoring duplicates.  Throws input_error on loops or
        // out-of-range endpoints.
        auto add_edge(int u, int v) -> void;

        auto has_edge(int u, int v) const -> bool;

        auto edges() const -> const std::vector<edge> & { return _edges; }

        auto neighbours(int v) const -> const std::vector<int> &;

        auto degree(int v) const -> int;

        auto set_label(int v, const std::string & tag) -> void;

        auto label(int v) const -> std::optional<std::string>;

        auto labels() const -> const std::map<int, std::string> & { return _labels; }

        auto operator==(const graph & other) const -> bool
        {
            return _size == other._size && _edges == other._edges && _labels == other._labels;
        }

        // Connected components as sorted vertex lists, ordered by smallest
        // member.
        auto components() const -> std::vector<std::vector<int>>;

        auto is_connected() const -> bool;

        // The subgraph induced on the given vertices, together with the map
        // from new indices back to the original vertex numbers.  Labels are
        // not carried over.
        auto induced_subgraph(const std::vector<int> & vertices) const
            -> std::pair<graph, std::vector<int>>;

        // Degree multiset, sorted ascending.
        auto degree_sequence() const -> std::vector<int>;

    private:
        int _size = 0;
        std::vector<edge> _edges;
        std::vector<std::vector<int>> _adjacency;
        std::map<int, std::string> _labels;
    };

    // Builders for the standard graphs used throughout the test-suite and
    // the reduction hosts.
    auto make_path(int n) -> graph;
    auto make_cycle(int n) -> graph;
    auto make_complete(int n) -> graph;
    auto make_complete_bipartite(int a, int b) -> graph;
    auto make_cube() -> graph;       // Q3, the 3-dimensional hypercube
    auto make_prism() -> graph;      // K3 x K2

    // Named cover hosts accepted on the command line and in catalog files.
    //
    //   k2 k3 k4 k5 k6 c4 : complete graphs and the 4-cycle
    //   k4plus            : K4 on {0,1,2,3} plus a pendant vertex 4 on 0;
    //                       vertices 1,2,3 are the colour classes
    //   k5minus           : K5 on {0..4} minus the edge {0,4};
    //                       vertices 1,2,3 are the colour classes
    //
    // The two-colouring target ("dumbbell") is deliberately not a graph here;
    // it is handled by the dedicated two-colouring solver.
    auto host_graph(const std::string & name) -> graph;

    auto is_known_host(const std::string & name) -> bool;
}
