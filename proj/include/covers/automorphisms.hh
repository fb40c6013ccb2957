// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <covers/graph.hh>
#include <covers/permutation.hh>

#include <vector>

namespace covers
{
    // All automorphisms of g, in lexicographic order of image lists.
    // Backtracking over degree-compatible images; intended for the small
    // graphs this toolkit works with (throws resource_error above 16
    // vertices, where the full group could be too large to list).
    auto automorphism_group(const graph & g) -> std::vector<permutation>;

    // Orbit of a vertex list under a group: the sorted set of images.
    // Each image is the vertex-wise application, NOT re-sorted, so this
    // distinguishes tuples (use for ordered boundary labelings).
    auto orbit_of_tuple(const std::vector<int> & tuple,
                        const std::vector<permutation> & group)
        -> std::vector<std::vector<int>>;

    // The subgroup fixing every vertex of `fixed` pointwise.
    auto pointwise_stabilizer(const std::vector<permutation> & group,
                              const std::vector<int> & fixed)
        -> std::vector<permutation>;
}
