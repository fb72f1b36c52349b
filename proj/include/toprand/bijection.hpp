#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "segmented_partition.hpp"
#include "shuffle_spec.hpp"

namespace toprand {

/// (sigma_1, ..., sigma_k) with sigma_i a term of B_{a_i}; one term of the
/// product B_{a_1} ... B_{a_k}.
struct ShuffleTuple {
    std::vector<Permutation> sigmas;

    friend bool operator==(const ShuffleTuple&, const ShuffleTuple&) = default;
};

namespace detail {

inline void validate_tuple(const ShuffleTuple& tuple, const ShuffleSpec& spec)
{
    spec.validate();
    if (static_cast<int>(tuple.sigmas.size()) != spec.k())
        throw InvalidArgument("shuffle tuple: expected " + std::to_string(spec.k()) + " permutations");
    for (int i = 0; i < spec.k(); ++i) {
        const auto& sigma = tuple.sigmas[i];
        require(sigma.size() == spec.n, "shuffle tuple: deck size mismatch");
        if (!is_term_of_top_to_random(sigma, spec.a[i]))
            throw InvalidArgument("shuffle tuple: factor " + std::to_string(i + 1) + " is not a term of B_" +
                                  std::to_string(spec.a[i]));
    }
}

} // namespace detail

/// sigma_1 sigma_2 ... sigma_k, left to right.
inline Permutation tuple_product(const ShuffleTuple& tuple)
{
    detail::require(!tuple.sigmas.empty(), "tuple_product: empty tuple");
    Permutation product = tuple.sigmas.front();
    for (std::size_t i = 1; i < tuple.sigmas.size(); ++i)
        product = compose(product, tuple.sigmas[i]);
    return product;
}

/// The hitter sequence (b_1, ..., b_{a_1+...+a_k}): sigma_i(1..a_i) concatenated.
inline std::vector<int> hitters(const ShuffleTuple& tuple, const ShuffleSpec& spec)
{
    detail::validate_tuple(tuple, spec);
    std::vector<int> b;
    for (int i = 0; i < spec.k(); ++i)
        for (int card = 1; card <= spec.a[i]; ++card)
            b.push_back(tuple.sigmas[i].position_of(card));
    return b;
}

/**
 * phi_j: part i collects the indices l of the hitters b_l that hit card i
 * while the shuffles are played on the deck 12...n. j is the number of
 * distinct cards touched and is derived from the tuple.
 */
inline SegmentedPartition phi(const ShuffleTuple& tuple, const ShuffleSpec& spec)
{
    detail::validate_tuple(tuple, spec);
    const int n = spec.n;

    std::vector<int> deck(n); // position - 1 -> card
    for (int i = 0; i < n; ++i)
        deck[i] = i + 1;
    std::vector<std::vector<int>> hits(n + 1);

    int l = 0;
    for (int i = 0; i < spec.k(); ++i) {
        const Permutation& sigma = tuple.sigmas[i];
        for (int m = 1; m <= spec.a[i]; ++m)
            hits[deck[m - 1]].push_back(++l);
        std::vector<int> next(n);
        for (int p = 1; p <= n; ++p)
            next[sigma.position_of(p) - 1] = deck[p - 1];
        deck = std::move(next);
    }

    int j = 0;
    while (j < n && !hits[j + 1].empty())
        ++j;
    for (int card = j + 1; card <= n; ++card)
        if (!hits[card].empty())
            throw std::logic_error("phi: touched cards are not an initial segment 1..j");

    SegmentedPartition alpha;
    alpha.parts.assign(hits.begin() + 1, hits.begin() + 1 + j);
    return alpha;
}

/**
 * The unique tuple with product t whose hitting pattern is alpha. Undoes
 * sigma_k, ..., sigma_1 starting from t: the d-th hitter of sigma_i sends the
 * d-th card to the position that its target card occupies in t_i, where t_i
 * is the deck right after sigma_i.
 */
inline ShuffleTuple phi_inverse(const SegmentedPartition& alpha, const Permutation& t,
                                const ShuffleSpec& spec)
{
    spec.validate();
    const int n = spec.n;
    const int j = alpha.part_count();
    detail::require(t.size() == n, "phi_inverse: deck size mismatch");
    validate_partition_shape(alpha, spec.total());
    detail::require(j >= 1 && j <= n, "phi_inverse: part count outside [1, n]");
    if (!is_term_of_top_to_random(t, j))
        throw InvalidArgument("phi_inverse: target deck is not a term of B_" + std::to_string(j));

    const auto card_hit = alpha.part_of_elements();

    ShuffleTuple tuple;
    tuple.sigmas.resize(spec.k());
    Permutation current = t;
    int end = spec.total();
    for (int i = spec.k() - 1; i >= 0; --i) {
        const int begin = end - spec.a[i];
        std::vector<int> targets(spec.a[i]);
        for (int d = 1; d <= spec.a[i]; ++d)
            targets[d - 1] = current.position_of(card_hit[begin + d]);
        try {
            tuple.sigmas[i] = shuffle_term(targets, n);
        } catch (const InvalidArgument&) {
            throw InvalidArgument("phi_inverse: segment " + std::to_string(i + 1) +
                                  " hits a card twice; partition is not segmented");
        }
        current = compose(current, inverse(tuple.sigmas[i]));
        end = begin;
    }
    if (!current.is_identity())
        throw InvalidArgument("phi_inverse: partition is not in Q_" + std::to_string(j) +
                              " for this spec (undoing the shuffles does not return to 12...n)");
    return tuple;
}

} // namespace toprand
