// SPDX-License-Identifier: Apache-2.0

#include <covers/dumbbell.hh>
#include <covers/error.hh>

#include <chrono>
#include <sstream>

using std::optional;
using std::vector;

using clock_type = std::chrono::steady_clock;

namespace covers
{
    namespace
    {
        struct balance
        {
            int same = 0;
            int opposite = 0;
            int unknown = 0;
        };

        auto tally(const graph & g, const vector<int> & colour, int v) -> balance
        {
            balance b;
            for (int u : g.neighbours(v)) {
                if (colour[u] == -1)
                    ++b.unknown;
                else if (colour[u] == colour[v])
                    ++b.same;
                else
                    ++b.opposite;
            }
            return b;
        }

        struct colouring_search
        {
            const graph & g;
            vector<int> colour;
            vector<int> component_root;   // smallest vertex of each component
            long long nodes = 0;
            long long node_budget;
            clock_type::time_point deadline;
            bool budget_hit = false;

            auto out_of_budget() -> bool
            {
                if (budget_hit)
                    return true;
                if (nodes > node_budget
                        || ((nodes & 0xfff) == 0 && clock_type::now() > deadline))
                    budget_hit = true;
                return budget_hit;
            }

            // Sets a colour and propagates the forced consequences; returns
            // false on contradiction.  `trail` collects vertices to uncolour.
            auto assign(int v, int c, vector<int> & trail) -> bool
            {
                colour[v] = c;
                trail.push_back(v);
                vector<int> queue{v};
                for (std::size_t head = 0; head < queue.size(); ++head) {
                    int active = queue[head];
                    // re-examine the coloured vertices around the change
                    for (int w : g.neighbours(active)) {
                        for (int centre : {active, w}) {
                            if (colour[centre] == -1)
                                continue;
                            auto b = tally(g, colour, centre);
                            if (b.opposite > 1 || b.same > 2)
                                return false;
                            if (b.unknown == 0 && b.opposite != 1)
                                return false;
                            int forced = -1;
                            if (b.opposite == 1 && b.unknown > 0)
                                forced = colour[centre];
                            else if (b.same == 2 && b.unknown == 1)
                                forced = 1 - colour[centre];
                            if (forced != -1)
                                for (int u : g.neighbours(centre))
                                    if (colour[u] == -1) {
                                        colour[u] = forced;
                                        trail.push_back(u);
                                        queue.push_back(u);
                                    }
                        }
                    }
                }
                return true;
            }

            auto search() -> bool
            {
                int v = -1;
                for (int u = 0; u < g.size(); ++u)
                    if (colour[u] == -1) {
                        v = u;
                        break;
                    }
                if (v == -1)
                    return true;

                // the first choice in a component is free up to swapping the
                // two colours, so branch on one colour only at the root
                bool root = component_root[v] == v;
                for (int c = 0; c < (root ? 1 : 2); ++c) {
                    ++nodes;
                    if (out_of_budget())
                        return false;
                    vector<int> trail;
                    if (assign(v, c, trail) && search())
                        return true;
                    for (int u : trail)
                        colour[u] = -1;
                    if (budget_hit)
                        return false;
                }
                return false;
            }
        };
    }

    auto check_dumbbell(const graph & g, const vector<int> & colouring)
        -> optional<cover_violation>
    {
        if (int(colouring.size()) != g.size())
            throw input_error{"colouring has " + std::to_string(colouring.size())
                              + " entries for " + std::to_string(g.size()) + " vertices"};
        for (int c : colouring)
            if (c != 0 && c != 1)
                throw input_error{"colours must be 0 or 1"};

        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) != 3) {
                std::ostringstream message;
                message << "vertex " << v << " has degree " << g.degree(v)
                        << ", every vertex must have degree 3";
                return cover_violation{"degree", message.str()};
            }

        for (int v = 0; v < g.size(); ++v) {
            int opposite = 0;
            for (int u : g.neighbours(v))
                if (colouring[u] != colouring[v])
                    ++opposite;
            if (opposite != 1) {
                std::ostringstream message;
                message << "vertex " << v << " has " << opposite
                        << " neighbours of the other colour, needs exactly 1";
                return cover_violation{"balance", message.str()};
            }
        }
        return std::nullopt;
    }

    auto solve_dumbbell(const graph & g, const budget & limits) -> dumbbell_result
    {
        dumbbell_result result;
        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) != 3) {
                result.status = outcome::exhausted;
                return result;
            }

        colouring_search state{
            .g = g,
            .colour = vector<int>(g.size(), -1),
            .component_root = vector<int>(g.size(), -1),
            .node_budget = limits.nodes,
            .deadline = clock_type::now()
                        + std::chrono::duration_cast<clock_type::duration>(
                              std::chrono::duration<double>(limits.seconds)),
        };
        for (auto & component : g.components())
            for (int v : component)
                state.component_root[v] = component.front();

        bool found = state.search();
        result.nodes = state.nodes;
        if (found) {
            result.status = outcome::found;
            result.colouring = state.colour;
            if (check_dumbbell(g, *result.colouring))
                throw internal_error{"search produced a colouring that fails verification"};
        }
        else
            result.status = state.budget_hit ? outcome::budget_exceeded
                                             : outcome::exhausted;
        return result;
    }

    auto naive_dumbbell_decision(const graph & g, const budget & limits) -> bool
    {
        for (int v = 0; v < g.size(); ++v)
            if (g.degree(v) != 3)
                return false;

        int n = g.size();
        // vertex whose closed neighbourhood completes at index v
        vector<vector<int>> finalized_at(n);
        for (int w = 0; w < n; ++w) {
            int last = w;
            for (int u : g.neighbours(w))
                last = std::max(last, u);
            finalized_at[last].push_back(w);
        }

        vector<int> colour(n, -1);
        long long nodes = 0;
        auto deadline = clock_type::now()
                        + std::chrono::duration_cast<clock_type::duration>(
                              std::chrono::duration<double>(limits.seconds));

        auto balanced = [&](int w) {
            int opposite = 0;
            for (int u : g.neighbours(w))
                if (colour[u] != colour[w])
                    ++opposite;
            return opposite == 1;
        };

        auto search = [&](auto && self, int v) -> bool {
            if (v == n)
                return true;
            for (int c = 0; c < 2; ++c) {
                if (++nodes > limits.nodes
                        || ((nodes & 0xfff) == 0 && clock_type::now() > deadline))
                    throw budget_error{"reference colouring search ran out of budget"};
                colour[v] = c;
                bool fine = true;
                for (int w : finalized_at[v])
                    if (! balanced(w)) {
                        fine = false;
                        break;
                    }
                if (fine && self(self, v + 1))
                    return true;
                colour[v] = -1;
            }
            return false;
        };
        return search(search, 0);
    }
}
