#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace toprand {

/// The product B_{a_1} B_{a_2} ... B_{a_k} acting on a deck of n cards.
struct ShuffleSpec {
    int n = 0;
    std::vector<int> a;

    int k() const { return static_cast<int>(a.size()); }
    int total() const { return std::accumulate(a.begin(), a.end(), 0); }
    int max_part() const { return a.empty() ? 0 : *std::max_element(a.begin(), a.end()); }

    /// Range of j for which B_j can appear in the expansion.
    int lowest_j() const { return max_part(); }
    int highest_j() const { return std::min(total(), n); }

    void validate() const
    {
        detail::require(n >= 1, "shuffle spec: deck size must be >= 1");
        detail::require(!a.empty(), "shuffle spec: need at least one shuffle size");
        for (int ai : a)
            if (ai < 1 || ai > n)
                throw InvalidArgument("shuffle spec: shuffle size " + std::to_string(ai) + " outside [1," +
                                      std::to_string(n) + "]");
    }

    friend bool operator==(const ShuffleSpec&, const ShuffleSpec&) = default;
};

} // namespace toprand
