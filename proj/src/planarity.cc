// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/planarity.hh>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

using std::binary_search;
using std::lower_bound;
using std::map;
using std::max;
using std::min;
using std::optional;
using std::pair;
using std::set;
using std::sort;
using std::string;
using std::vector;

namespace covers
{
    namespace
    {
        auto normalized(int u, int v) -> edge
        {
            return {min(u, v), max(u, v)};
        }

        // Vertex sets of the biconnected blocks (every edge lies in exactly
        // one block; isolated vertices are in none).  Iterative lowpoint
        // search with an edge stack, so deep graphs cannot overflow the
        // call stack.
        auto blocks_of(const graph & g) -> vector<vector<int>>
        {
            int n = g.size();
            vector<int> disc(n, -1), low(n, 0), parent(n, -1), child(n, 0);
            vector<edge> edge_stack;
            vector<vector<int>> blocks;
            int timer = 0;

            for (int root = 0; root < n; ++root) {
                if (disc[root] != -1)
                    continue;
                vector<int> stack{root};
                disc[root] = low[root] = timer++;
                while (! stack.empty()) {
                    int v = stack.back();
                    if (child[v] < g.degree(v)) {
                        int w = g.neighbours(v)[child[v]++];
                        if (w == parent[v])
                            continue;
                        if (disc[w] == -1) {
                            parent[w] = v;
                            disc[w] = low[w] = timer++;
                            edge_stack.push_back({v, w});
                            stack.push_back(w);
                        }
                        else if (disc[w] < disc[v]) {
                            edge_stack.push_back({v, w});
                            low[v] = min(low[v], disc[w]);
                        }
                    }
                    else {
                        stack.pop_back();
                        int u = parent[v];
                        if (u == -1)
                            continue;
                        low[u] = min(low[u], low[v]);
                        if (low[v] >= disc[u]) {
                            set<int> vertices;
                            while (true) {
                                auto e = edge_stack.back();
                                edge_stack.pop_back();
                                vertices.insert(e.first);
                                vertices.insert(e.second);
                                if (e.first == u && e.second == v)
                                    break;
                            }
                            blocks.emplace_back(vertices.begin(), vertices.end());
                        }
                    }
                }
            }
            return blocks;
        }

        // Any cycle of a graph that has one, as a vertex sequence.
        auto find_cycle(const graph & b) -> vector<int>
        {
            int n = b.size();
            vector<int> parent(n, -2), index(n, 0), path;
            vector<char> on_path(n, 0);

            for (int root = 0; root < n; ++root) {
                if (parent[root] != -2)
                    continue;
                parent[root] = -1;
                on_path[root] = 1;
                path.assign(1, root);
                while (! path.empty()) {
                    int v = path.back();
                    if (index[v] < b.degree(v)) {
                        int w = b.neighbours(v)[index[v]++];
                        if (w == parent[v])
                            continue;
                        if (parent[w] == -2) {
                            parent[w] = v;
                            on_path[w] = 1;
                            path.push_back(w);
                        }
                        else if (on_path[w]) {
                            auto from = std::find(path.begin(), path.end(), w);
                            return vector<int>{from, path.end()};
                        }
                    }
                    else {
                        on_path[v] = 0;
                        path.pop_back();
                    }
                }
            }
            throw internal_error{"cycle requested from an acyclic graph"};
        }

        struct fragment
        {
            vector<int> attachments;   // sorted embedded vertices it touches
            bool chord = false;
            edge chord_edge{};
            int seed = -1;             // an interior vertex, for non-chords
        };

        // Face-by-face embedding of one biconnected block with at least
        // three vertices.  Returns the faces as directed closed walks (each
        // directed edge on exactly one face), or nothing if a fragment runs
        // out of admissible faces, which certifies non-planarity.
        auto embed_block_faces(const graph & b) -> optional<vector<vector<int>>>
        {
            int n = b.size();
            vector<char> in_h(n, 0);
            set<edge> done;
            vector<vector<int>> faces;

            auto start = find_cycle(b);
            int k = int(start.size());
            for (int i = 0; i < k; ++i) {
                in_h[start[i]] = 1;
                done.insert(normalized(start[i], start[(i + 1) % k]));
            }
            faces.push_back(start);
            faces.emplace_back(start.rbegin(), start.rend());

            int remaining = b.edge_count() - k;
            while (remaining > 0) {
                int face_count = int(faces.size());
                vector<vector<int>> face_sets(face_count);
                vector<vector<int>> faces_at(n);
                for (int f = 0; f < face_count; ++f) {
                    face_sets[f] = faces[f];
                    sort(face_sets[f].begin(), face_sets[f].end());
                    for (int v : faces[f])
                        faces_at[v].push_back(f);
                }

                vector<fragment> fragments;
                for (auto & e : b.edges())
                    if (! done.count(e) && in_h[e.first] && in_h[e.second]) {
                        fragment fr;
                        fr.attachments = {e.first, e.second};
                        fr.chord = true;
                        fr.chord_edge = e;
                        fragments.push_back(std::move(fr));
                    }

                vector<int> component(n, -1);
                int component_count = 0;
                for (int v = 0; v < n; ++v) {
                    if (in_h[v] || component[v] != -1)
                        continue;
                    vector<int> queue{v};
                    component[v] = component_count;
                    set<int> attach;
                    for (std::size_t head = 0; head < queue.size(); ++head)
                        for (int w : b.neighbours(queue[head])) {
                            if (in_h[w])
                                attach.insert(w);
                            else if (component[w] == -1) {
                                component[w] = component_count;
                                queue.push_back(w);
                            }
                        }
                    fragment fr;
                    fr.attachments.assign(attach.begin(), attach.end());
                    fr.seed = v;
                    fragments.push_back(std::move(fr));
                    ++component_count;
                }

                if (fragments.empty())
                    throw internal_error{"embedding lost track of remaining edges"};

                // A fragment with no admissible face certifies failure; one
                // with a unique admissible face must be placed first; when
                // every fragment has two or more choices, any placement is
                // safe.
                int chosen = -1, target = -1;
                for (int i = 0; i < int(fragments.size()); ++i) {
                    auto & fr = fragments[i];
                    int pivot = fr.attachments[0];
                    for (int a : fr.attachments)
                        if (faces_at[a].size() < faces_at[pivot].size())
                            pivot = a;
                    int count = 0, first = -1;
                    for (int f : faces_at[pivot]) {
                        bool admissible = true;
                        for (int a : fr.attachments)
                            if (! binary_search(face_sets[f].begin(), face_sets[f].end(), a)) {
                                admissible = false;
                                break;
                            }
                        if (admissible) {
                            if (first == -1)
                                first = f;
                            if (++count == 2)
                                break;
                        }
                    }
                    if (count == 0)
                        return std::nullopt;
                    if (chosen == -1) {
                        chosen = i;
                        target = first;
                    }
                    if (count == 1) {
                        chosen = i;
                        target = first;
                        break;
                    }
                }

                // a path across the chosen fragment between two distinct
                // attachments, interior outside the embedded part
                auto & fr = fragments[chosen];
                vector<int> alpha;
                if (fr.chord)
                    alpha = {fr.chord_edge.first, fr.chord_edge.second};
                else {
                    int a = fr.attachments[0];
                    vector<int> previous(n, -2), queue;
                    int reached = -1;
                    for (int w : b.neighbours(a))
                        if (! in_h[w] && component[w] == component[fr.seed]) {
                            previous[w] = a;
                            queue.push_back(w);
                        }
                    for (std::size_t head = 0; head < queue.size() && reached == -1; ++head) {
                        int u = queue[head];
                        for (int w : b.neighbours(u)) {
                            if (in_h[w]) {
                                if (w != a) {
                                    previous[w] = u;
                                    reached = w;
                                    break;
                                }
                            }
                            else if (previous[w] == -2) {
                                previous[w] = u;
                                queue.push_back(w);
                            }
                        }
                    }
                    if (reached == -1)
                        throw internal_error{"fragment attached at a single vertex"};
                    for (int v = reached; v != a; v = previous[v])
                        alpha.push_back(v);
                    alpha.push_back(a);
                    std::reverse(alpha.begin(), alpha.end());
                }

                // split the target face along the path
                vector<int> old = faces[target];
                int old_size = int(old.size());
                int a = alpha.front(), z = alpha.back();
                int ia = int(std::find(old.begin(), old.end(), a) - old.begin());
                int iz = int(std::find(old.begin(), old.end(), z) - old.begin());

                vector<int> face_one{alpha.begin(), alpha.end()};
                for (int j = (iz + 1) % old_size; j != ia; j = (j + 1) % old_size)
                    face_one.push_back(old[j]);
                vector<int> face_two{alpha.rbegin(), alpha.rend()};
                for (int j = (ia + 1) % old_size; j != iz; j = (j + 1) % old_size)
                    face_two.push_back(old[j]);

                for (std::size_t j = 0; j + 1 < alpha.size(); ++j) {
                    done.insert(normalized(alpha[j], alpha[j + 1]));
                    --remaining;
                }
                for (std::size_t j = 1; j + 1 < alpha.size(); ++j)
                    in_h[alpha[j]] = 1;

                faces[target] = std::move(face_one);
                faces.push_back(std::move(face_two));
            }

            return faces;
        }

        // Turns the face walks into a clockwise neighbour order per vertex:
        // the successor of u around v is the vertex following v on the face
        // that uses the directed edge (u, v).
        auto rotation_from_faces(const graph & b, const vector<vector<int>> & faces)
            -> vector<vector<int>>
        {
            map<pair<int, int>, int> after;
            std::size_t total = 0;
            for (auto & f : faces) {
                int k = int(f.size());
                total += k;
                for (int i = 0; i < k; ++i)
                    after[{f[i], f[(i + 1) % k]}] = f[(i + 2) % k];
            }
            if (total != 2 * std::size_t(b.edge_count()) || after.size() != total)
                throw internal_error{"face walks do not cover each directed edge once"};

            vector<vector<int>> rotation(b.size());
            for (int v = 0; v < b.size(); ++v) {
                if (b.degree(v) == 0)
                    continue;
                int first = b.neighbours(v)[0], u = first;
                do {
                    rotation[v].push_back(u);
                    auto found = after.find({u, v});
                    if (found == after.end())
                        throw internal_error{"face walks miss a directed edge"};
                    u = found->second;
                } while (u != first && int(rotation[v].size()) <= b.degree(v));
                if (u != first || int(rotation[v].size()) != b.degree(v))
                    throw internal_error{"face walks do not close into one wheel"};
            }
            return rotation;
        }

        // Faces per component traced from a rotation system, or nothing if
        // some rotation list is not an ordering of that vertex's neighbours.
        // Edgeless components count one face.
        auto face_counts(const graph & g, const vector<vector<int>> & rotation)
            -> optional<pair<vector<vector<int>>, vector<int>>>
        {
            if (int(rotation.size()) != g.size())
                return std::nullopt;
            for (int v = 0; v < g.size(); ++v) {
                auto check = rotation[v];
                sort(check.begin(), check.end());
                if (check != g.neighbours(v))
                    return std::nullopt;
            }

            vector<map<int, int>> position(g.size());
            for (int v = 0; v < g.size(); ++v)
                for (int i = 0; i < int(rotation[v].size()); ++i)
                    position[v][rotation[v][i]] = i;

            auto & edges = g.edges();
            auto directed_id = [&](int u, int v) {
                auto e = normalized(u, v);
                int index = int(lower_bound(edges.begin(), edges.end(), e) - edges.begin());
                return 2 * index + (u < v ? 0 : 1);
            };

            auto components = g.components();
            vector<int> component_of(g.size(), -1);
            for (int c = 0; c < int(components.size()); ++c)
                for (int v : components[c])
                    component_of[v] = c;

            int m = g.edge_count();
            vector<int> faces(components.size(), 0);
            vector<char> visited(2 * m, 0);
            for (int id = 0; id < 2 * m; ++id) {
                if (visited[id])
                    continue;
                int u = id % 2 == 0 ? edges[id / 2].first : edges[id / 2].second;
                int v = id % 2 == 0 ? edges[id / 2].second : edges[id / 2].first;
                ++faces[component_of[u]];
                int steps = 0;
                while (true) {
                    int current = directed_id(u, v);
                    if (visited[current])
                        break;
                    visited[current] = 1;
                    int w = rotation[v][(position[v][u] + 1) % rotation[v].size()];
                    u = v;
                    v = w;
                    if (++steps > 2 * m)
                        throw internal_error{"face tracing failed to close"};
                }
            }
            for (int c = 0; c < int(components.size()); ++c)
                if (components[c].size() == 1 && g.degree(components[c][0]) == 0)
                    faces[c] = 1;

            return pair{components, faces};
        }
    }

    auto is_planar(const graph & g) -> bool
    {
        int n = g.size(), m = g.edge_count();
        if (n <= 4 || m <= 8)
            return true;
        if (m > 3 * n - 6)
            return false;
        for (auto & block : blocks_of(g)) {
            if (int(block.size()) < 3)
                continue;
            auto [sub, back] = g.induced_subgraph(block);
            if (sub.size() >= 3 && sub.edge_count() > 3 * sub.size() - 6)
                return false;
            if (! embed_block_faces(sub))
                return false;
        }
        return true;
    }

    auto embed_planar(const graph & g) -> planar_embedding
    {
        planar_embedding result;
        result.rotation.assign(g.size(), {});

        bool planar = ! (g.size() >= 3 && g.edge_count() > 3 * g.size() - 6);
        if (planar)
            for (auto & block : blocks_of(g)) {
                auto [sub, back] = g.induced_subgraph(block);
                if (sub.edge_count() == 1) {
                    result.rotation[back[0]].push_back(back[1]);
                    result.rotation[back[1]].push_back(back[0]);
                    continue;
                }
                auto faces = embed_block_faces(sub);
                if (! faces) {
                    planar = false;
                    break;
                }
                auto local = rotation_from_faces(sub, *faces);
                for (int v = 0; v < sub.size(); ++v)
                    for (int u : local[v])
                        result.rotation[back[v]].push_back(back[u]);
            }

        if (planar) {
            result.planar = true;
            if (! verify_rotation(g, result.rotation))
                throw internal_error{"embedding failed its own face count"};
            return result;
        }

        result.planar = false;
        result.rotation.clear();

        // Greedy minimisation: drop any edge whose removal keeps the graph
        // non-planar.  What survives is edge-minimal non-planar, hence a
        // subdivision of one of the two forbidden graphs.
        auto rebuild = [&](const vector<edge> & active) {
            graph h{g.size()};
            for (auto & [u, v] : active)
                h.add_edge(u, v);
            return h;
        };
        vector<edge> active = g.edges();
        std::size_t i = 0;
        while (i < active.size()) {
            vector<edge> candidate;
            candidate.reserve(active.size() - 1);
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != i)
                    candidate.push_back(active[j]);
            if (! is_planar(rebuild(candidate)))
                active = std::move(candidate);
            else
                ++i;
        }
        result.witness = std::move(active);
        return result;
    }

    auto verify_rotation(const graph & g, const vector<vector<int>> & rotation) -> bool
    {
        auto counted = face_counts(g, rotation);
        if (! counted)
            return false;
        auto & [components, faces] = *counted;

        vector<int> edges_in(components.size(), 0);
        vector<int> component_of(g.size(), -1);
        for (int c = 0; c < int(components.size()); ++c)
            for (int v : components[c])
                component_of[v] = c;
        for (auto & [u, v] : g.edges())
            ++edges_in[component_of[u]];

        for (int c = 0; c < int(components.size()); ++c)
            if (int(components[c].size()) - edges_in[c] + faces[c] != 2)
                return false;
        return true;
    }

    auto count_faces(const graph & g, const vector<vector<int>> & rotation) -> int
    {
        auto counted = face_counts(g, rotation);
        if (! counted)
            throw input_error{"rotation lists must order the exact neighbour sets"};
        int total = 0;
        for (int f : counted->second)
            total += f;
        return total;
    }

    auto classify_witness(int size, const vector<edge> & witness) -> string
    {
        map<int, set<int>> adj;
        for (auto & [u, v] : witness) {
            if (u < 0 || v < 0 || u >= size || v >= size || u == v)
                throw input_error{"witness edge out of range"};
            adj[u].insert(v);
            adj[v].insert(u);
        }

        // suppress degree-two vertices while the ends are non-adjacent
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = adj.begin(); it != adj.end(); ++it) {
                if (it->second.size() != 2)
                    continue;
                int a = *it->second.begin();
                int z = *std::next(it->second.begin());
                if (adj[a].count(z))
                    continue;
                int v = it->first;
                adj[a].erase(v);
                adj[z].erase(v);
                adj[a].insert(z);
                adj[z].insert(a);
                adj.erase(it);
                changed = true;
                break;
            }
        }
        for (auto it = adj.begin(); it != adj.end();)
            it = it->second.empty() ? adj.erase(it) : std::next(it);

        if (adj.size() == 5) {
            for (auto & [v, nb] : adj)
                if (nb.size() != 4)
                    return "";
            return "k5";
        }
        if (adj.size() == 6) {
            for (auto & [v, nb] : adj)
                if (nb.size() != 3)
                    return "";
            int first = adj.begin()->first;
            set<int> side{first};
            for (auto & [v, nb] : adj)
                if (v != first && ! nb.count(first))
                    side.insert(v);
            if (side.size() != 3)
                return "";
            for (int u : side)
                for (auto & [v, nb] : adj)
                    if (! side.count(v) && ! nb.count(u))
                        return "";
            return "k33";
        }
        return "";
    }
}
