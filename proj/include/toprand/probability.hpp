#pragma once

#include <algorithm>

#include "bigint.hpp"
#include "coefficients.hpp"
#include "gperm.hpp"
#include "permutation.hpp"
#include "shuffle_algebra.hpp"
#include "shuffle_spec.hpp"

namespace toprand {

/**
 * Number of tuples (sigma_1..sigma_k), sigma_i a term of B_{a_i}, whose
 * product is `target`. Each B_j holds target exactly once when
 * min_shuffle_size(target) <= j, so this is a tail sum of |Q_j|.
 */
inline BigInt ways_to_reach(const Permutation& target, const ShuffleSpec& spec)
{
    spec.validate();
    detail::require(target.size() == spec.n, "ways_to_reach: deck size mismatch");
    const int from = std::max(min_shuffle_size(target), spec.lowest_j());
    BigInt sum = 0;
    for (int j = from; j <= spec.highest_j(); ++j)
        sum += q_cardinality(spec, j);
    return sum;
}

inline Rational probability_of(const Permutation& target, const ShuffleSpec& spec)
{
    return Rational(ways_to_reach(target, spec), shuffle_outcome_count(spec));
}

/// Whether s is a term of B-hat_c: abs(s) is a term of B_c and every card
/// above c shows the identity face.
inline bool is_term_of_hat_top_to_random(const GPermutation& s, int c)
{
    if (!is_term_of_top_to_random(abs(s), c)) return false;
    for (int card = c + 1; card <= s.size(); ++card)
        if (s.face_of(card) != 0) return false;
    return true;
}

/**
 * Wreath analogue of ways_to_reach. Membership in B-hat_c is checked for each
 * c separately; a deck showing a non-identity face on a card that no shuffle
 * can touch has count 0.
 */
inline BigInt g_ways_to_reach(const GPermutation& target, const ShuffleSpec& spec,
                              const FiniteGroup& group)
{
    spec.validate();
    detail::require(target.size() == spec.n, "g_ways_to_reach: deck size mismatch");
    detail::require(target.max_face() < group.order(), "g_ways_to_reach: face outside the group");
    BigInt sum = 0;
    for (int c = spec.lowest_j(); c <= spec.highest_j(); ++c) {
        if (!is_term_of_hat_top_to_random(target, c)) continue;
        sum += q_cardinality(spec, c) *
               ipow(group.order(), static_cast<std::uint64_t>(spec.total() - c));
    }
    return sum;
}

inline Rational g_probability_of(const GPermutation& target, const ShuffleSpec& spec,
                                 const FiniteGroup& group)
{
    return Rational(g_ways_to_reach(target, spec, group), g_shuffle_outcome_count(spec, group));
}

} // namespace toprand
