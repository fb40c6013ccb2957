// SPDX-License-Identifier: Apache-2.0

#include <covers/error.hh>
#include <covers/permutation.hh>

#include <numeric>

using std::vector;

namespace covers
{
    permutation::permutation(int n) :
        _images(n)
    {
        if (n < 0)
            throw input_error{"permutation degree must be non-negative"};
        std::iota(_images.begin(), _images.end(), 0);
    }

    permutation::permutation(vector<int> images) :
        _images(std::move(images))
    {
        vector<char> seen(_images.size(), 0);
        for (int x : _images) {
            if (x < 0 || x >= int(_images.size()) || seen[x])
                throw input_error{"image list is not a bijection"};
            seen[x] = 1;
        }
    }

    auto permutation::operator*(const permutation & other) const -> permutation
    {
        if (size() != other.size())
            throw input_error{"composed permutations must have equal degree"};
        vector<int> result(size());
        for (int x = 0; x < size(); ++x)
            result[x] = _images[other._images[x]];
        return permutation{std::move(result)};
    }

    auto permutation::inverse() const -> permutation
    {
        vector<int> result(size());
        for (int x = 0; x < size(); ++x)
            result[_images[x]] = x;
        return permutation{std::move(result)};
    }

    auto permutation::is_identity() const -> bool
    {
        for (int x = 0; x < size(); ++x)
            if (_images[x] != x)
                return false;
        return true;
    }
}
