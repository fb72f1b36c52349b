#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace toprand {

/**
 * A deck of n distinct cards in deck notation (inverse one-line notation).
 *
 * deck()[i] = c means card c sits at position i + 1 after the shuffle, i.e.
 * the permutation sends card c to position i + 1. Cards and positions are
 * 1-based at every public boundary.
 *
 * Products are read left to right: compose(p, q) first applies p, then q.
 */
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> deck)
        : deck_(std::move(deck)), position_(deck_.size() + 1, 0)
    {
        const int n = size();
        detail::require(n >= 1, "permutation: empty deck");
        for (int i = 0; i < n; ++i) {
            const int card = deck_[i];
            if (card < 1 || card > n)
                throw InvalidArgument("permutation: card " + std::to_string(card) + " out of range [1," +
                                      std::to_string(n) + "]");
            if (position_[card] != 0)
                throw InvalidArgument("permutation: card " + std::to_string(card) + " repeated");
            position_[card] = i + 1;
        }
    }

    static Permutation identity(int n)
    {
        detail::require(n >= 1, "identity: empty deck");
        std::vector<int> deck(n);
        std::iota(deck.begin(), deck.end(), 1);
        return Permutation(std::move(deck));
    }

    int size() const { return static_cast<int>(deck_.size()); }

    std::span<const int> deck() const { return deck_; }

    /// Card sitting at 1-based `position`.
    int card_at(int position) const { return deck_[position - 1]; }

    /// 1-based position to which `card` is sent.
    int position_of(int card) const { return position_[card]; }

    bool is_identity() const
    {
        for (int i = 0; i < size(); ++i)
            if (deck_[i] != i + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation& lhs, const Permutation& rhs)
    {
        return lhs.deck_ == rhs.deck_;
    }

    // Canonical order: lexicographic on the deck sequence.
    friend std::strong_ordering operator<=>(const Permutation& lhs, const Permutation& rhs)
    {
        return lhs.deck_ <=> rhs.deck_;
    }

private:
    std::vector<int> deck_;
    std::vector<int> position_; // indexed by card, slot 0 unused
};

/// Left-to-right product: card i ends at q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q)
{
    detail::require(p.size() == q.size(), "compose: deck size mismatch");
    const int n = p.size();
    std::vector<int> deck(n);
    for (int card = 1; card <= n; ++card)
        deck[q.position_of(p.position_of(card)) - 1] = card;
    return Permutation(std::move(deck));
}

inline Permutation inverse(const Permutation& p)
{
    std::vector<int> deck(p.size());
    for (int card = 1; card <= p.size(); ++card)
        deck[card - 1] = p.position_of(card);
    return Permutation(std::move(deck));
}

/**
 * m - 1, where m is the smallest card such that m, m+1, ..., n appear in this
 * order in the deck. p is a term of B_c exactly when max(1, m - 1) <= c <= n.
 * Returns 0 for the identity deck.
 */
inline int min_shuffle_size(const Permutation& p)
{
    int m = p.size();
    while (m > 1 && p.position_of(m - 1) < p.position_of(m))
        --m;
    return m - 1;
}

/// Whether p is a term of the top-to-random element B_c.
inline bool is_term_of_top_to_random(const Permutation& p, int c)
{
    return c >= 1 && c <= p.size() && min_shuffle_size(p) <= c;
}

/**
 * The term of B_a that sends card i to position targets[i-1] for i = 1..a.
 * Cards a+1..n fill the remaining positions in increasing order.
 */
inline Permutation shuffle_term(std::span<const int> targets, int n)
{
    detail::require(n >= 1, "shuffle_term: empty deck");
    const int a = static_cast<int>(targets.size());
    detail::require(a <= n, "shuffle_term: more targets than cards");
    std::vector<int> deck(n, 0);
    for (int i = 0; i < a; ++i) {
        const int pos = targets[i];
        if (pos < 1 || pos > n)
            throw InvalidArgument("shuffle_term: target position " + std::to_string(pos) + " out of range");
        detail::require(deck[pos - 1] == 0, "shuffle_term: repeated target position");
        deck[pos - 1] = i + 1;
    }
    int next = a + 1;
    for (int& slot : deck)
        if (slot == 0) slot = next++;
    return Permutation(std::move(deck));
}

/// An injection [a] -> [n], stored as the positions to which cards 1..a go.
struct Injection {
    int a = 0;
    std::vector<int> targets;

    friend bool operator==(const Injection&, const Injection&) = default;
};

/**
 * Membership in S^inj: the injection must be exactly the data of its deck
 * viewed as a term of B_a with a minimal, i.e. card a lands after the first
 * free position (where card a+1 goes). Requires a <= n - 1.
 */
inline bool in_injection_set(const Injection& inj, int n)
{
    if (inj.a < 0 || inj.a != static_cast<int>(inj.targets.size())) return false;
    if (inj.a == 0) return n >= 1;
    if (inj.a > n - 1) return false;
    std::vector<bool> used(n + 1, false);
    for (int t : inj.targets) {
        if (t < 1 || t > n || used[t]) return false;
        used[t] = true;
    }
    int first_free = 1;
    while (used[first_free])
        ++first_free;
    return inj.targets.back() > first_free;
}

/// chi: records where the first min_shuffle_size(p) cards are sent.
inline Injection as_injection(const Permutation& p)
{
    Injection inj;
    inj.a = min_shuffle_size(p);
    for (int card = 1; card <= inj.a; ++card)
        inj.targets.push_back(p.position_of(card));
    return inj;
}

inline Permutation from_injection(const Injection& inj, int n)
{
    detail::require(n >= 1, "from_injection: empty deck");
    detail::require(inj.a >= 0 && inj.a == static_cast<int>(inj.targets.size()),
                    "from_injection: domain size does not match target count");
    for (int t : inj.targets)
        if (t < 1 || t > n)
            throw InvalidArgument("from_injection: target " + std::to_string(t) + " out of range");
    if (!in_injection_set(inj, n))
        throw InvalidArgument("from_injection: injection not in S^inj (its deck would need fewer than " +
                              std::to_string(inj.a) + " shuffled cards)");
    return shuffle_term(inj.targets, n);
}

/// All n! decks in canonical (lexicographic) order.
inline std::vector<Permutation> all_permutations(int n)
{
    detail::require(n >= 1, "all_permutations: empty deck");
    std::vector<int> deck(n);
    std::iota(deck.begin(), deck.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(deck);
    } while (std::next_permutation(deck.begin(), deck.end()));
    return out;
}

} // namespace toprand
