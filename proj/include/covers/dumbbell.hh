// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <covers/cover.hh>
#include <covers/graph.hh>

#include <optional>
#include <vector>

namespace covers
{
    // The two-triangle-shaped target with a loop at each end of one edge is
    // the one target this toolkit treats specially: no simple-graph object
    // represents it, but its covers have a clean characterization.  A graph
    // covers it exactly when it is cubic and admits a two-colouring in
    // which every vertex has exactly two neighbours of its own colour and
    // one of the other (the loop contributes the two same-colour slots, the
    // connecting edge the opposite-colour slot).

    struct dumbbell_result
    {
        outcome status = outcome::exhausted;
        std::optional<std::vector<int>> colouring;   // 0/1 per vertex when found
        long long nodes = 0;
    };

    // Checks the characterization for a given colouring: every vertex must
    // have degree three and exactly one neighbour of the opposite colour.
    // Wrong length or values outside {0, 1} throw input_error.
    auto check_dumbbell(const graph & g, const std::vector<int> & colouring)
        -> std::optional<cover_violation>;

    // Finds a witness colouring by unit propagation plus branching; a
    // non-cubic input is an immediate no.  Deterministic.
    auto solve_dumbbell(const graph & g, const budget & limits = {})
        -> dumbbell_result;

    // Reference decision by plain index-order backtracking over colours,
    // pruning only vertices whose closed neighbourhood is fully coloured.
    auto naive_dumbbell_decision(const graph & g, const budget & limits = {})
        -> bool;
}
