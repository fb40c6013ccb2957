// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/graph.hh>

#include <algorithm>
#include <numeric>

using std::lower_bound;
using std::pair;
using std::sort;
using std::string;
using std::to_string;
using std::vector;

namespace covers
{
    graph::graph(int size) :
        _size(size)
    {
        if (size < 0)
            throw input_error{"graph size must be non-negative"};
        _adjacency.resize(size);
    }

    auto graph::add_edge(int u, int v) -> void
    {
        if (u < 0 || v < 0 || u >= _size || v >= _size)
            throw input_error{"edge endpoint out of range: " + to_string(u) + " " + to_string(v)};
        if (u == v)
            throw input_error{"loops are not allowed: " + to_string(u)};

        auto e = edge{std::min(u, v), std::max(u, v)};
        auto position = lower_bound(_edges.begin(), _edges.end(), e);
        if (position != _edges.end() && *position == e)
            return;
        _edges.insert(position, e);

        auto insert_sorted = [](vector<int> & list, int w) {
            list.insert(lower_bound(list.begin(), list.end(), w), w);
        };
        insert_sorted(_adjacency[e.first], e.second);
        insert_sorted(_adjacency[e.second], e.first);
    }

    auto graph::has_edge(int u, int v) const -> bool
    {
        if (u < 0 || v < 0 || u >= _size || v >= _size || u == v)
            return false;
        auto e = edge{std::min(u, v), std::max(u, v)};
        return std::binary_search(_edges.begin(), _edges.end(), e);
    }

    auto graph::neighbours(int v) const -> const vector<int> &
    {
        if (v < 0 || v >= _size)
            throw input_error{"vertex out of range: " + to_string(v)};
        return _adjacency[v];
    }

    auto graph::degree(int v) const -> int
    {
        return int(neighbours(v).size());
    }

    auto graph::set_label(int v, const string & tag) -> void
    {
        if (v < 0 || v >= _size)
            throw input_error{"labelled vertex out of range: " + to_string(v)};
        _labels[v] = tag;
    }

    auto graph::label(int v) const -> std::optional<string>
    {
        auto found = _labels.find(v);
        if (found == _labels.end())
            return std::nullopt;
        return found->second;
    }

    auto graph::components() const -> vector<vector<int>>
    {
        vector<vector<int>> result;
        vector<char> seen(_size, 0);
        for (int start = 0; start < _size; ++start) {
            if (seen[start])
                continue;
            vector<int> component, queue{start};
            seen[start] = 1;
            while (! queue.empty()) {
                int v = queue.back();
                queue.pop_back();
                component.push_back(v);
                for (int w : _adjacency[v])
                    if (! seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            }
            sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto graph::is_connected() const -> bool
    {
        return _size <= 1 || components().size() == 1;
    }

    auto graph::induced_subgraph(const vector<int> & vertices) const
        -> pair<graph, vector<int>>
    {
        vector<int> back(vertices);
        sort(back.begin(), back.end());
        vector<int> forward(_size, -1);
        for (int i = 0; i < int(back.size()); ++i) {
            if (back[i] < 0 || back[i] >= _size)
                throw input_error{"induced subgraph vertex out of range"};
            if (i > 0 && back[i] == back[i - 1])
                throw input_error{"induced subgraph vertex repeated"};
            forward[back[i]] = i;
        }

        graph result{int(back.size())};
        for (auto & [u, v] : _edges)
            if (forward[u] >= 0 && forward[v] >= 0)
                result.add_edge(forward[u], forward[v]);
        return {result, back};
    }

    auto graph::degree_sequence() const -> vector<int>
    {
        vector<int> result(_size);
        for (int v = 0; v < _size; ++v)
            result[v] = degree(v);
        sort(result.begin(), result.end());
        return result;
    }

    auto make_path(int n) -> graph
    {
        graph g{n};
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto make_cycle(int n) -> graph
    {
        if (n < 3)
            throw input_error{"cycles need at least three vertices"};
        graph g{n};
        for (int i = 0; i < n; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    auto make_complete(int n) -> graph
    {
        graph g{n};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto make_complete_bipartite(int a, int b) -> graph
    {
        graph g{a + b};
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                g.add_edge(u, a + v);
        return g;
    }

    auto make_cube() -> graph
    {
        graph g{8};
        for (int u = 0; u < 8; ++u)
            for (int bit = 0; bit < 3; ++bit) {
                int v = u ^ (1 << bit);
                if (u < v)
                    g.add_edge(u, v);
            }
        return g;
    }

    auto make_prism() -> graph
    {
        graph g{6};
        for (int i = 0; i < 3; ++i) {
            g.add_edge(i, (i + 1) % 3);
            g.add_edge(3 + i, 3 + (i + 1) % 3);
            g.add_edge(i, 3 + i);
        }
        return g;
    }

    auto host_graph(const string & name) -> graph
    {
        if (name == "k2")
            return make_complete(2);
        if (name == "k3")
            return make_complete(3);
        if (name == "k4")
            return make_complete(4);
        if (name == "k5")
            return make_complete(5);
        if (name == "k6")
            return make_complete(6);
        if (name == "c4")
            return make_cycle(4);
        if (name == "k4plus") {
            auto g = graph{5};
            for (int u = 0; u < 4; ++u)
                for (int v = u + 1; v < 4; ++v)
                    g.add_edge(u, v);
            g.add_edge(0, 4);
            return g;
        }
        if (name == "k5minus") {
            auto g = make_complete(5);
            graph h{5};
            for (auto & [u, v] : g.edges())
                if (! (u == 0 && v == 4))
                    h.add_edge(u, v);
            return h;
        }
        throw input_error{"unknown host graph: " + name};
    }

    auto is_known_host(const string & name) -> bool
    {
        for (auto known : {"k2", "k3", "k4", "k5", "k6", "c4", "k4plus", "k5minus"})
            if (name == known)
                return true;
        return false;
    }
}
