// SPDX-License-Identifier: Apache-2.0

#include <covers/automorphisms.hh>
#include <covers/error.hh>

#include <algorithm>
#include <set>

using std::set;
using std::vector;

namespace covers
{
    namespace
    {
        // Extends the partial map `image` (identity of -1 marks unset) one
        // vertex at a time in vertex order, so the results come out in
        // lexicographic order of image lists without an extra sort.
        auto extend(const graph & g, vector<int> & image, vector<char> & used,
                    int next, vector<permutation> & out) -> void
        {
            int n = g.size();
            if (next == n) {
                out.emplace_back(image);
                return;
            }
            for (int candidate = 0; candidate < n; ++candidate) {
                if (used[candidate] || g.degree(candidate) != g.degree(next))
                    continue;
                bool consistent = true;
                for (int w : g.neighbours(next)) {
                    if (w > next)
                        continue;
                    if (w == next || ! g.has_edge(candidate, image[w])) {
                        consistent = false;
                        break;
                    }
                }
                // adjacency must be preserved both ways: nonedges to
                // already-placed vertices must stay nonedges
                if (consistent)
                    for (int w = 0; w < next; ++w)
                        if (! g.has_edge(w, next) && g.has_edge(image[w], candidate)) {
                            consistent = false;
                            break;
                        }
                if (! consistent)
                    continue;
                image[next] = candidate;
                used[candidate] = 1;
                extend(g, image, used, next + 1, out);
                used[candidate] = 0;
                image[next] = -1;
            }
        }
    }

    auto automorphism_group(const graph & g) -> vector<permutation>
    {
        if (g.size() > 16)
            throw resource_error{"automorphism listing is limited to 16 vertices"};
        vector<int> image(g.size(), -1);
        vector<char> used(g.size(), 0);
        vector<permutation> out;
        extend(g, image, used, 0, out);
        return out;
    }

    auto orbit_of_tuple(const vector<int> & tuple, const vector<permutation> & group)
        -> vector<vector<int>>
    {
        set<vector<int>> seen;
        for (auto & p : group) {
            vector<int> image(tuple.size());
            for (int i = 0; i < int(tuple.size()); ++i)
                image[i] = p(tuple[i]);
            seen.insert(std::move(image));
        }
        return vector<vector<int>>{seen.begin(), seen.end()};
    }

    auto pointwise_stabilizer(const vector<permutation> & group, const vector<int> & fixed)
        -> vector<permutation>
    {
        vector<permutation> out;
        for (auto & p : group) {
            bool fixes = true;
            for (int v : fixed)
                if (p(v) != v) {
                    fixes = false;
                    break;
                }
            if (fixes)
                out.push_back(p);
        }
        return out;
    }
}
