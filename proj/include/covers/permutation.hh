// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace covers
{
    // A permutation of {0, ..., n-1} stored as its image list.
    class permutation
    {
    public:
        // Identity on n points.
        explicit permutation(int n);

        // From an image list; throws input_error unless it is a bijection.
        explicit permutation(std::vector<int> images);

        auto size() const -> int { return int(_images.size()); }
        auto operator()(int x) const -> int { return _images[x]; }
        auto images() const -> const std::vector<int> & { return _images; }

        // Composition: (p * q)(x) = p(q(x)).
        auto operator*(const permutation & other) const -> permutation;
        auto inverse() const -> permutation;
        auto is_identity() const -> bool;

        auto operator==(const permutation & other) const -> bool = default;
        auto operator<(const permutation & other) const -> bool
        {
            return _images < other._images;
        }

    private:
        std::vector<int> _images;
    };
}
