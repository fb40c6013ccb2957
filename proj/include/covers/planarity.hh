// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <covers/graph.hh>

#include <string>
#include <vector>

namespace covers
{
    // Outcome of a planarity run.  Exactly one of the two payloads is
    // meaningful: a combinatorial embedding (clockwise neighbour order per
    // vertex) when the graph is planar, or the edge set of a subdivision of
    // one of the two forbidden graphs when it is not.
    struct planar_embedding
    {
        bool planar = false;
        std::vector<std::vector<int>> rotation;
        std::vector<edge> witness;
    };

    // Boolean test only (cheap prefilters + face-by-face embedding of each
    // biconnected block).
    auto is_planar(const graph & g) -> bool;

    // Full run: embeds block by block and merges the rotations at cut
    // vertices, or extracts a witness by greedily deleting edges whose
    // removal keeps the graph non-planar.
    auto embed_planar(const graph & g) -> planar_embedding;

    // Checks that a rotation system is a genus-zero embedding: every list
    // must order the exact neighbour set of its vertex, and tracing the
    // faces must satisfy vertices - edges + faces = 2 on every connected
    // component.
    auto verify_rotation(const graph & g,
                         const std::vector<std::vector<int>> & rotation) -> bool;

    // Number of faces traced from a rotation system (edgeless components
    // count one face each).
    auto count_faces(const graph & g,
                     const std::vector<std::vector<int>> & rotation) -> int;

    // Classifies a witness edge set: suppresses degree-two vertices and
    // reports "k5", "k33", or "" if the result is neither.
    auto classify_witness(int size, const std::vector<edge> & witness)
        -> std::string;
}
