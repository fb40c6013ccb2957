// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <covers/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace covers
{
    // Search limits shared by the decision procedures.  A run that exceeds
    // either limit stops with an explicit budget outcome instead of guessing.
    struct budget
    {
        long long nodes = 100'000'000;
        double seconds = 300.0;
    };

    enum class outcome
    {
        found,
        exhausted,
        budget_exceeded,
    };

    // Why a vertex map fails to be a covering projection.  `kind` is one of
    // "edge" (an edge lands on a non-edge), "degree" (a vertex and its image
    // differ in degree), "local-injectivity" (two neighbours of a common
    // vertex share an image).
    struct cover_violation
    {
        std::string kind;
        std::string message;
    };

    // Is f — indexed by vertex of g, with values in h — a locally bijective
    // homomorphism?  Returns the first violation in a fixed scan order:
    // edges in canonical order, then vertices by degree, then vertices by
    // neighbourhood injectivity.  A map of the wrong length or with values
    // outside h is malformed input and throws input_error instead.
    auto check_cover(const graph & g, const graph & h, const std::vector<int> & f)
        -> std::optional<cover_violation>;

    // Cheap necessary conditions: h must offer every degree that occurs in
    // g; when h is connected the vertex count of g must be a multiple of
    // h's and each degree class must scale by the same factor; a bipartite
    // h admits no cover from a graph with an odd cycle.  `possible == true`
    // only means "not ruled out here".
    struct precheck_result
    {
        bool possible = true;
        std::string reason;
    };

    auto precheck_cover(const graph & g, const graph & h) -> precheck_result;

    struct solve_result
    {
        outcome status = outcome::exhausted;
        std::optional<std::vector<int>> cover;
        long long nodes = 0;
    };

    // Backtracking search for one covering projection: domains as bitmasks
    // over h (hence h is limited to 64 vertices, resource_error above),
    // smallest-domain-first variable order with index tie-break, ascending
    // value order, and propagation of the edge and distance-two
    // distinctness constraints.  Deterministic for fixed inputs.
    auto solve_cover(const graph & g, const graph & h, const budget & limits = {})
        -> solve_result;

    struct enumeration
    {
        std::vector<std::vector<int>> covers;
        bool complete = false;   // false when the limit or budget cut it off
        long long nodes = 0;
    };

    // All covering projections in lexicographic order of the image vector,
    // up to `limit` of them.  Uses index variable order so the output order
    // is the natural one.
    auto enumerate_covers(const graph & g, const graph & h, std::size_t limit,
                          const budget & limits = {}) -> enumeration;

    // Reference decision kept deliberately plain: index variable order, no
    // degree filter, no propagation — a branch is cut only when the partial
    // map already violates the definition on assigned vertices.  Decides
    // exactly like enumerating all |V(h)|^|V(g)| maps.  Throws budget_error
    // when the limits run out.
    auto naive_cover_decision(const graph & g, const graph & h,
                              const budget & limits = {}) -> bool;
}
