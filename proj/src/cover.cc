// SPDX-License-Identifier: Apache-2.0

#include <covers/cover.hh>
#include <covers/error.hh>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using clock_type = std::chrono::steady_clock;

namespace covers
{
    namespace
    {
        auto require_map_shape(const graph & g, const graph & h, const vector<int> & f)
            -> void
        {
            if (int(f.size()) != g.size())
                throw input_error{"map has " + std::to_string(f.size())
                                  + " entries for " + std::to_string(g.size()) + " vertices"};
            for (int v = 0; v < g.size(); ++v)
                if (f[v] < 0 || f[v] >= h.size())
                    throw input_error{"image of vertex " + std::to_string(v)
                                      + " is outside the target graph"};
        }

        auto is_bipartite(const graph & g) -> bool
        {
            vector<int> side(g.size(), -1);
            for (int start = 0; start < g.size(); ++start) {
                if (side[start] != -1)
                    continue;
                side[start] = 0;
                vector<int> queue{start};
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    int v = queue[head];
                    for (int w : g.neighbours(v)) {
                        if (side[w] == -1) {
                            side[w] = 1 - side[v];
                            queue.push_back(w);
                        }
                        else if (side[w] == side[v])
                            return false;
                    }
                }
            }
            return true;
        }

        // Shared bookkeeping for the bitmask searches.
        struct search_state
        {
            const graph & g;
            const graph & h;
            vector<uint64_t> domain;
            vector<int> assignment;
            vector<uint64_t> h_adjacency;
            vector<std::pair<int, uint64_t>> trail;
            long long nodes = 0;
            long long node_budget = 0;
            clock_type::time_point deadline;
            bool budget_hit = false;

            search_state(const graph & g_in, const graph & h_in, const budget & limits) :
                g(g_in),
                h(h_in),
                assignment(g_in.size(), -1),
                node_budget(limits.nodes),
                deadline(clock_type::now()
                         + std::chrono::duration_cast<clock_type::duration>(
                               std::chrono::duration<double>(limits.seconds)))
            {
                if (h.size() > 64)
                    throw resource_error{"cover search is limited to 64 target vertices"};

                h_adjacency.assign(h.size(), 0);
                for (int x = 0; x < h.size(); ++x)
                    for (int y : h.neighbours(x))
                        h_adjacency[x] |= uint64_t{1} << y;

                // degree-matched initial domains
                domain.assign(g.size(), 0);
                for (int v = 0; v < g.size(); ++v)
                    for (int x = 0; x < h.size(); ++x)
                        if (g.degree(v) == h.degree(x))
                            domain[v] |= uint64_t{1} << x;
            }

            auto out_of_budget() -> bool
            {
                if (budget_hit)
                    return true;
                if (nodes > node_budget
                        || ((nodes & 0xfff) == 0 && clock_type::now() > deadline))
                    budget_hit = true;
                return budget_hit;
            }

            auto shrink(int v, uint64_t keep) -> bool
            {
                uint64_t next = domain[v] & keep;
                if (next != domain[v]) {
                    trail.emplace_back(v, domain[v]);
                    domain[v] = next;
                }
                return next != 0;
            }

            // Applies the constraints of assigning image x to vertex v.
            // Returns false (with changes still on the trail) on a wipeout.
            auto propagate(int v, int x) -> bool
            {
                uint64_t chosen = uint64_t{1} << x;
                if (! shrink(v, chosen))
                    return false;
                for (int u : g.neighbours(v)) {
                    if (! shrink(u, h_adjacency[x]))
                        return false;
                    for (int w : g.neighbours(u))
                        if (w != v && ! shrink(w, ~chosen))
                            return false;
                }
                return true;
            }

            auto undo_to(std::size_t mark) -> void
            {
                while (trail.size() > mark) {
                    auto & [v, previous] = trail.back();
                    domain[v] = previous;
                    trail.pop_back();
                }
            }
        };

        // One solution, smallest-domain-first.
        auto solve_recursive(search_state & s) -> bool
        {
            int v = -1;
            int best = 65;
            for (int u = 0; u < s.g.size(); ++u) {
                if (s.assignment[u] != -1)
                    continue;
                int size = std::popcount(s.domain[u]);
                if (size < best) {
                    best = size;
                    v = u;
                }
            }
            if (v == -1)
                return true;

            uint64_t options = s.domain[v];
            while (options != 0) {
                int x = std::countr_zero(options);
                options &= options - 1;
                ++s.nodes;
                if (s.out_of_budget())
                    return false;
                auto mark = s.trail.size();
                s.assignment[v] = x;
                if (s.propagate(v, x) && solve_recursive(s))
                    return true;
                s.assignment[v] = -1;
                s.undo_to(mark);
                if (s.budget_hit)
                    return false;
            }
            return false;
        }

        // All solutions in lexicographic order (index variable order).
        auto enumerate_recursive(search_state & s, int v, std::size_t limit,
                                 enumeration & out) -> bool
        {
            if (v == s.g.size()) {
                out.covers.push_back(s.assignment);
                return out.covers.size() < limit;
            }
            uint64_t options = s.domain[v];
            while (options != 0) {
                int x = std::countr_zero(options);
                options &= options - 1;
                ++s.nodes;
                if (s.out_of_budget())
                    return false;
                auto mark = s.trail.size();
                s.assignment[v] = x;
                bool keep_going = true;
                if (s.propagate(v, x))
                    keep_going = enumerate_recursive(s, v + 1, limit, out);
                s.assignment[v] = -1;
                s.undo_to(mark);
                if (! keep_going || s.budget_hit)
                    return false;
            }
            return true;
        }

        // Definition-only reference search.
        struct naive_state
        {
            const graph & g;
            const graph & h;
            vector<int> assignment;
            long long nodes = 0;
            long long node_budget;
            clock_type::time_point deadline;

            auto consistent(int v, int x) -> bool
            {
                if (g.degree(v) != h.degree(x))
                    return false;
                for (int u : g.neighbours(v)) {
                    if (assignment[u] != -1 && ! h.has_edge(x, assignment[u]))
                        return false;
                    for (int w : g.neighbours(u))
                        if (w != v && assignment[w] == x)
                            return false;
                }
                return true;
            }

            auto search(int v) -> bool
            {
                if (v == g.size())
                    return true;
                for (int x = 0; x < h.size(); ++x) {
                    if (++nodes > node_budget
                            || ((nodes & 0xfff) == 0 && clock_type::now() > deadline))
                        throw budget_error{"reference cover search ran out of budget"};
                    if (! consistent(v, x))
                        continue;
                    assignment[v] = x;
                    if (search(v + 1))
                        return true;
                    assignment[v] = -1;
                }
                return false;
            }
        };
    }

    auto check_cover(const graph & g, const graph & h, const vector<int> & f)
        -> optional<cover_violation>
    {
        require_map_shape(g, h, f);

        for (auto & [u, v] : g.edges())
            if (! h.has_edge(f[u], f[v])) {
                std::ostringstream message;
                message << "edge {" << u << ", " << v << "} lands on {"
                        << f[u] << ", " << f[v] << "}, which is not an edge";
                return cover_violation{"edge", message.str()};
            }

        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) != h.degree(f[v])) {
                std::ostringstream message;
                message << "vertex " << v << " has degree " << g.degree(v)
                        << " but its image " << f[v] << " has degree " << h.degree(f[v]);
                return cover_violation{"degree", message.str()};
            }

        for (int v = 0; v < g.size(); ++v) {
            std::map<int, int> seen;
            for (int u : g.neighbours(v)) {
                auto [existing, inserted] = seen.emplace(f[u], u);
                if (! inserted) {
                    std::ostringstream message;
                    message << "neighbours " << existing->second << " and " << u
                            << " of vertex " << v << " share the image " << f[u];
                    return cover_violation{"local-injectivity", message.str()};
                }
            }
        }

        return std::nullopt;
    }

    auto precheck_cover(const graph & g, const graph & h) -> precheck_result
    {
        if (g.size() == 0)
            return {true, ""};
        if (h.size() == 0)
            return {false, "target graph has no vertices"};

        vector<char> target_degrees(1 + h.size(), 0);
        for (int x = 0; x < h.size(); ++x)
            target_degrees[h.degree(x)] = 1;
        for (int v = 0; v < g.size(); ++v) {
            int d = g.degree(v);
            if (d >= int(target_degrees.size()) || ! target_degrees[d])
                return {false, "degree " + std::to_string(d)
                                   + " occurs in the source but not in the target"};
        }

        if (h.is_connected()) {
            if (g.size() % h.size() != 0)
                return {false, "source order " + std::to_string(g.size())
                                   + " is not a multiple of target order "
                                   + std::to_string(h.size())};
            int factor = g.size() / h.size();
            std::map<int, int> source_classes, target_classes;
            for (int v = 0; v < g.size(); ++v)
                ++source_classes[g.degree(v)];
            for (int x = 0; x < h.size(); ++x)
                ++target_classes[h.degree(x)];
            for (auto & [d, count] : target_classes)
                if (source_classes[d] != factor * count)
                    return {false, "degree class " + std::to_string(d)
                                       + " does not scale by the sheet count"};
        }

        if (is_bipartite(h) && ! is_bipartite(g))
            return {false, "target is bipartite but the source has an odd cycle"};

        return {true, ""};
    }

    auto solve_cover(const graph & g, const graph & h, const budget & limits)
        -> solve_result
    {
        solve_result result;

        auto quick = precheck_cover(g, h);
        if (! quick.possible) {
            result.status = outcome::exhausted;
            return result;
        }

        search_state state{g, h, limits};
        for (int v = 0; v < g.size(); ++v)
            if (state.domain[v] == 0) {
                result.status = outcome::exhausted;
                return result;
            }

        bool found = solve_recursive(state);
        result.nodes = state.nodes;
        if (found) {
            result.status = outcome::found;
            result.cover = state.assignment;
            if (check_cover(g, h, *result.cover))
                throw internal_error{"search produced a map that fails verification"};
        }
        else
            result.status = state.budget_hit ? outcome::budget_exceeded
                                             : outcome::exhausted;
        return result;
    }

    auto enumerate_covers(const graph & g, const graph & h, std::size_t limit,
                          const budget & limits) -> enumeration
    {
        enumeration result;
        if (limit == 0)
            return result;

        search_state state{g, h, limits};
        bool exhausted = enumerate_recursive(state, 0, limit, result);
        result.nodes = state.nodes;
        result.complete = exhausted && ! state.budget_hit;
        for (auto & f : result.covers)
            if (check_cover(g, h, f))
                throw internal_error{"enumeration produced a map that fails verification"};
        return result;
    }

    auto naive_cover_decision(const graph & g, const graph & h, const budget & limits)
        -> bool
    {
        naive_state state{
            g,
            h,
            vector<int>(g.size(), -1),
            0,
            limits.nodes,
            clock_type::now()
                + std::chrono::duration_cast<clock_type::duration>(
                      std::chrono::duration<double>(limits.seconds)),
        };
        return state.search(0);
    }
}
