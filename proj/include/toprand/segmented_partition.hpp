#pragma once

#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "coefficients.hpp"
#include "error.hpp"

namespace toprand {

/**
 * A set partition of [a_1 + ... + a_k] with parts ordered by their minima.
 * parts[i] is the sorted list of elements in part i + 1.
 */
struct SegmentedPartition {
    std::vector<std::vector<int>> parts;

    int part_count() const { return static_cast<int>(parts.size()); }

    int element_count() const
    {
        int total = 0;
        for (const auto& p : parts)
            total += static_cast<int>(p.size());
        return total;
    }

    /// For each element 1..N the 1-based part containing it; slot 0 unused.
    std::vector<int> part_of_elements() const
    {
        std::vector<int> owner(element_count() + 1, 0);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (int e : parts[i])
                owner[e] = static_cast<int>(i) + 1;
        return owner;
    }

    friend bool operator==(const SegmentedPartition&, const SegmentedPartition&) = default;
    friend auto operator<=>(const SegmentedPartition&, const SegmentedPartition&) = default;
};

/// Checks the shape invariants: disjoint sorted nonempty parts covering
/// [total], ordered by minima. Throws InvalidArgument otherwise.
inline void validate_partition_shape(const SegmentedPartition& alpha, int total)
{
    std::vector<bool> seen(total + 1, false);
    int previous_min = 0;
    for (const auto& part : alpha.parts) {
        detail::require(!part.empty(), "partition: empty part");
        detail::require(part.front() > previous_min, "partition: parts not ordered by minima");
        previous_min = part.front();
        int previous = 0;
        for (int e : part) {
            if (e < 1 || e > total)
                throw InvalidArgument("partition: element " + std::to_string(e) + " outside [1," +
                                      std::to_string(total) + "]");
            detail::require(e > previous, "partition: part not strictly increasing");
            if (seen[e])
                throw InvalidArgument("partition: element " + std::to_string(e) + " repeated");
            seen[e] = true;
            previous = e;
        }
    }
    for (int e = 1; e <= total; ++e)
        if (!seen[e])
            throw InvalidArgument("partition: element " + std::to_string(e) + " missing");
}

/// Whether alpha is an (a_1..a_k)-segmented partition (any number of parts).
inline bool is_segmented_partition(const SegmentedPartition& alpha, std::span<const int> a)
{
    detail::validate_sizes(a);
    const int total = std::accumulate(a.begin(), a.end(), 0);
    try {
        validate_partition_shape(alpha, total);
    } catch (const InvalidArgument&) {
        return false;
    }
    // With parts ordered by minima, Rules 1-3 reduce to: the elements of
    // each segment sit in pairwise distinct parts.
    const auto owner = alpha.part_of_elements();
    int start = 1;
    for (int size : a) {
        std::vector<bool> used(alpha.parts.size() + 1, false);
        for (int e = start; e < start + size; ++e) {
            if (used[owner[e]]) return false;
            used[owner[e]] = true;
        }
        start += size;
    }
    return true;
}

/// (l_2, ..., l_k): how many parts have their minimum in each segment c >= 2.
inline std::vector<int> anchor_signature(const SegmentedPartition& alpha, std::span<const int> a)
{
    std::vector<int> l(a.size() - 1, 0);
    for (const auto& part : alpha.parts) {
        const int c = segment_of(part.front(), a);
        if (c >= 2) ++l[c - 2];
    }
    return l;
}

/**
 * Visits every element of Q_j^{a_1..a_k} exactly once, built by placing
 * 1, 2, ..., a_1 + ... + a_k into bins in order:
 *   segment 1 fills bins 1..a_1 one element each;
 *   segment c >= 2 opens l_c new bins with its chosen anchors (in increasing
 *   order) and puts its other elements injectively into the already-open bins;
 *   a_1 + l_2 + ... + l_k = j.
 * Order: anchor tuples lexicographically, then anchor choices (segment 2
 * outermost, each a lexicographic combination), then non-anchor placements.
 */
template <class Visitor>
void for_each_segmented_partition(std::span<const int> a, int j, Visitor&& visit)
{
    detail::validate_sizes(a);
    const int k = static_cast<int>(a.size());
    const int total = std::accumulate(a.begin(), a.end(), 0);

    std::vector<int> start(k + 1, 1); // first element of each segment
    for (int c = 1; c < k; ++c)
        start[c] = start[c - 1] + a[c - 1];

    for (const auto& l : anchor_tuples(a, j)) {
        std::vector<int> open_before(k, a[0]); // open bins before segment c
        for (int c = 2; c < k; ++c)
            open_before[c] = open_before[c - 1] + l[c - 2];

        std::vector<std::vector<int>> anchors(k); // offsets within segment
        std::vector<int> bin_of(total + 1, 0);
        for (int e = 1; e <= a[0]; ++e)
            bin_of[e] = e;

        auto emit = [&] {
            SegmentedPartition alpha;
            alpha.parts.assign(j, {});
            for (int e = 1; e <= total; ++e)
                alpha.parts[bin_of[e] - 1].push_back(e);
            visit(static_cast<const SegmentedPartition&>(alpha));
        };

        // Non-anchor placements, segment by segment.
        auto place = [&](auto&& self, int c, int offset, std::vector<bool>& taken) -> void {
            if (c == k) {
                emit();
                return;
            }
            if (offset == 0) {
                taken.assign(open_before[c] + 1, false);
                for (std::size_t u = 0; u < anchors[c].size(); ++u)
                    bin_of[start[c] + anchors[c][u]] = open_before[c] + static_cast<int>(u) + 1;
            }
            if (offset == a[c]) {
                std::vector<bool> fresh;
                self(self, c + 1, 0, fresh);
                return;
            }
            const bool is_anchor = std::find(anchors[c].begin(), anchors[c].end(), offset) !=
                                   anchors[c].end();
            if (is_anchor) {
                self(self, c, offset + 1, taken);
                return;
            }
            for (int bin = 1; bin <= open_before[c]; ++bin) {
                if (taken[bin]) continue;
                taken[bin] = true;
                bin_of[start[c] + offset] = bin;
                self(self, c, offset + 1, taken);
                taken[bin] = false;
            }
        };

        // Anchor choices: a combination of l_c offsets in each segment.
        auto choose = [&](auto&& self, int c) -> void {
            if (c == k) {
                std::vector<bool> taken;
                place(place, 1, 0, taken);
                return;
            }
            const int want = l[c - 1];
            std::vector<int> combo(want);
            std::iota(combo.begin(), combo.end(), 0);
            while (true) {
                anchors[c] = combo;
                self(self, c + 1);
                int i = want - 1;
                while (i >= 0 && combo[i] == a[c] - want + i)
                    --i;
                if (i < 0) break;
                ++combo[i];
                for (int m = i + 1; m < want; ++m)
                    combo[m] = combo[m - 1] + 1;
            }
        };
        choose(choose, 1);
    }
}

inline std::vector<SegmentedPartition> enumerate_segmented_partitions(std::span<const int> a, int j)
{
    std::vector<SegmentedPartition> out;
    for_each_segmented_partition(a, j, [&](const SegmentedPartition& alpha) { out.push_back(alpha); });
    return out;
}

inline std::vector<SegmentedPartition> enumerate_segmented_partitions(const ShuffleSpec& spec, int j)
{
    spec.validate();
    return enumerate_segmented_partitions(spec.a, j);
}

} // namespace toprand
