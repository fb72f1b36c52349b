#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "shuffle_spec.hpp"

namespace toprand {

/// P(m, l) = m! / (m - l)!, and 0 when l > m.
inline BigInt falling_factorial(int m, int l)
{
    detail::require(m >= 0 && l >= 0, "falling_factorial: negative argument");
    if (l > m) return 0;
    BigInt result = 1;
    for (int i = 0; i < l; ++i)
        result *= m - i;
    return result;
}

inline BigInt binomial(int m, int l)
{
    detail::require(m >= 0 && l >= 0, "binomial: negative argument");
    if (l > m) return 0;
    l = std::min(l, m - l);
    BigInt result = 1;
    for (int i = 1; i <= l; ++i) {
        result *= m - l + i;
        result /= i;
    }
    return result;
}

/// Stirling numbers of the second kind by S(k,j) = j S(k-1,j) + S(k-1,j-1).
inline BigInt stirling2(int k, int j)
{
    detail::require(k >= 0 && j >= 0, "stirling2: negative argument");
    if (j > k) return 0;
    std::vector<BigInt> row(j + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= k; ++m) {
        for (int c = std::min(m, j); c >= 1; --c)
            row[c] = c * row[c] + row[c - 1];
        row[0] = 0;
    }
    return row[j];
}

inline BigInt bell(int k)
{
    detail::require(k >= 1, "bell: k must be >= 1");
    BigInt sum = 0;
    for (int a = 1; a <= k; ++a)
        sum += stirling2(k, a);
    return sum;
}

/// Segment (1-based shuffle index) holding element e of [a_1 + ... + a_k].
inline int segment_of(int element, std::span<const int> a)
{
    int upper = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        upper += a[c];
        if (element <= upper) return static_cast<int>(c) + 1;
    }
    throw InvalidArgument("segment_of: element beyond the last segment");
}

namespace detail {

inline void validate_sizes(std::span<const int> a)
{
    require(!a.empty(), "need at least one shuffle size");
    for (int ai : a)
        require(ai >= 1, "shuffle sizes must be >= 1");
}

} // namespace detail

/**
 * All anchor tuples (l_2, ..., l_k) with l_c in [0, a_c] and
 * l_2 + ... + l_k = j - a_1, in lexicographic order. For k = 1 the only
 * tuple is the empty one, and only when j = a_1.
 */
inline std::vector<std::vector<int>> anchor_tuples(std::span<const int> a, int j)
{
    detail::validate_sizes(a);
    std::vector<std::vector<int>> out;
    const int k = static_cast<int>(a.size());
    const int target = j - a[0];
    if (target < 0) return out;

    std::vector<int> suffix_cap(k + 1, 0);
    for (int c = k - 1; c >= 1; --c)
        suffix_cap[c] = suffix_cap[c + 1] + a[c];
    if (target > suffix_cap[1]) return out;

    std::vector<int> l(k - 1, 0);
    auto rec = [&](auto&& self, int c, int remaining) -> void {
        if (c == k) {
            if (remaining == 0) out.push_back(l);
            return;
        }
        for (int v = 0; v <= std::min(a[c], remaining); ++v) {
            if (remaining - v > suffix_cap[c + 1]) continue;
            l[c - 1] = v;
            self(self, c + 1, remaining - v);
        }
    };
    rec(rec, 1, target);
    return out;
}

/// The summand of the coefficient formula for one anchor tuple:
/// prod_c C(a_c, l_c) P(a_1 + l_2 + ... + l_{c-1}, a_c - l_c).
inline BigInt anchor_weight(std::span<const int> a, std::span<const int> l)
{
    detail::validate_sizes(a);
    detail::require(l.size() + 1 == a.size(), "anchor_weight: tuple length must be k - 1");
    BigInt product = 1;
    int open_bins = a[0];
    for (std::size_t c = 1; c < a.size(); ++c) {
        const int lc = l[c - 1];
        detail::require(lc >= 0 && lc <= a[c], "anchor_weight: l_c outside [0, a_c]");
        product *= binomial(a[c], lc) * falling_factorial(open_bins, a[c] - lc);
        open_bins += lc;
    }
    return product;
}

/**
 * |Q_j^{a_1..a_k}|: the number of (a_1..a_k)-segmented j-part partitions of
 * [a_1 + ... + a_k], with no truncation by deck size.
 *
 * Sums anchor_weight over anchor tuples; the sum is accumulated by the
 * running anchor count so the cost is polynomial in k.
 */
inline BigInt segmented_count(std::span<const int> a, int j)
{
    detail::validate_sizes(a);
    const int k = static_cast<int>(a.size());
    if (j < a[0]) return 0;
    const int target = j - a[0];

    // ways[s]: weighted count of partial tuples (l_2..l_c) with sum s
    std::vector<BigInt> ways(target + 1, 0);
    ways[0] = 1;
    for (int c = 1; c < k; ++c) {
        std::vector<BigInt> next(target + 1, 0);
        for (int s = 0; s <= target; ++s) {
            if (ways[s] == 0) continue;
            for (int lc = 0; lc <= a[c] && s + lc <= target; ++lc) {
                const BigInt placements = falling_factorial(a[0] + s, a[c] - lc);
                if (placements == 0) continue;
                next[s + lc] += ways[s] * binomial(a[c], lc) * placements;
            }
        }
        ways = std::move(next);
    }
    return ways[target];
}

/// |Q_j| truncated to the range j in [max a_i, min(sum a_i, n)] of the expansion.
inline BigInt q_cardinality(const ShuffleSpec& spec, int j)
{
    spec.validate();
    if (j < spec.lowest_j() || j > spec.highest_j()) return 0;
    return segmented_count(spec.a, j);
}

/// Coefficients of B_{a_1} ... B_{a_k} = sum_j |Q_j| B_j, zero entries omitted.
inline std::map<int, BigInt> expansion(const ShuffleSpec& spec)
{
    spec.validate();
    std::map<int, BigInt> out;
    for (int j = spec.lowest_j(); j <= spec.highest_j(); ++j) {
        BigInt q = segmented_count(spec.a, j);
        if (q != 0) out.emplace(j, std::move(q));
    }
    return out;
}

} // namespace toprand
