#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coefficients.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "shuffle_algebra.hpp"
#include "shuffle_spec.hpp"

namespace toprand {

/**
 * A finite group given by its Cayley table. Elements are indices 0..m-1 and
 * index 0 is the identity. cayley()[x][y] is the product xy.
 */
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> cayley) : table_(std::move(cayley))
    {
        const int m = order();
        detail::require(m >= 1, "group: empty table");
        for (const auto& row : table_) {
            detail::require(static_cast<int>(row.size()) == m, "group: table is not square");
            for (int v : row)
                detail::require(v >= 0 && v < m, "group: entry outside [0, order)");
        }
        for (int x = 0; x < m; ++x)
            detail::require(table_[0][x] == x && table_[x][0] == x,
                            "group: element 0 is not a two-sided identity");
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                for (int z = 0; z < m; ++z)
                    detail::require(table_[table_[x][y]][z] == table_[x][table_[y][z]],
                                    "group: multiplication is not associative");
        inverse_.assign(m, -1);
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y)
                if (table_[x][y] == 0 && table_[y][x] == 0) inverse_[x] = y;
            if (inverse_[x] < 0)
                throw InvalidArgument("group: element " + std::to_string(x) + " has no inverse");
        }
    }

    /// Z/mZ with element i standing for i mod m.
    static FiniteGroup cyclic(int m)
    {
        detail::require(m >= 1, "cyclic group: order must be >= 1");
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y)
                t[x][y] = (x + y) % m;
        return FiniteGroup(std::move(t));
    }

    /// The symmetric group on three letters (nonabelian, order 6). Element i
    /// is the i-th permutation of {0,1,2} in lexicographic one-line order.
    static FiniteGroup symmetric3()
    {
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        auto index_of = [&](const std::array<int, 3>& q) {
            return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
        };
        std::vector<std::vector<int>> t(6, std::vector<int>(6));
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y < 6; ++y) {
                std::array<int, 3> xy{};
                for (int i = 0; i < 3; ++i)
                    xy[i] = perms[y][perms[x][i]];
                t[x][y] = index_of(xy);
            }
        return FiniteGroup(std::move(t));
    }

    int order() const { return static_cast<int>(table_.size()); }
    int multiply(int x, int y) const { return table_[x][y]; }
    int inverse(int x) const { return inverse_[x]; }
    const std::vector<std::vector<int>>& cayley() const { return table_; }

    bool contains(int x) const { return x >= 0 && x < order(); }

    friend bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs)
    {
        return lhs.table_ == rhs.table_;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

/// A card carrying a group element on its upturned face.
struct GCard {
    int card = 0;
    int face = 0;

    friend auto operator<=>(const GCard&, const GCard&) = default;
};

/**
 * An element of G wr S_n in deck notation: deck()[i] = {c, g} means card c
 * is sent to position i + 1 with face g up. Faces are group indices; the
 * group itself travels alongside (see GAlgebraElement and g_compose).
 */
class GPermutation {
public:
    GPermutation() = default;

    explicit GPermutation(std::vector<GCard> deck)
        : deck_(std::move(deck)), position_(deck_.size() + 1, 0), face_(deck_.size() + 1, 0)
    {
        const int n = size();
        detail::require(n >= 1, "G-permutation: empty deck");
        for (int i = 0; i < n; ++i) {
            const auto [card, face] = deck_[i];
            detail::require(card >= 1 && card <= n, "G-permutation: card out of range");
            detail::require(position_[card] == 0, "G-permutation: card repeated");
            detail::require(face >= 0, "G-permutation: negative face");
            position_[card] = i + 1;
            face_[card] = face;
        }
    }

    static GPermutation identity(int n)
    {
        detail::require(n >= 1, "G-permutation: empty deck");
        std::vector<GCard> deck(n);
        for (int i = 0; i < n; ++i)
            deck[i] = {i + 1, 0};
        return GPermutation(std::move(deck));
    }

    /// Lift of an ordinary deck with the given face on each card (faces[c-1] for card c).
    static GPermutation with_faces(const Permutation& p, std::span<const int> faces)
    {
        detail::require(static_cast<int>(faces.size()) == p.size(), "G-permutation: face count mismatch");
        std::vector<GCard> deck(p.size());
        for (int i = 0; i < p.size(); ++i) {
            const int card = p.deck()[i];
            deck[i] = {card, faces[card - 1]};
        }
        return GPermutation(std::move(deck));
    }

    int size() const { return static_cast<int>(deck_.size()); }
    std::span<const GCard> deck() const { return deck_; }
    int position_of(int card) const { return position_[card]; }
    int face_of(int card) const { return face_[card]; }

    int max_face() const
    {
        int m = 0;
        for (const auto& c : deck_)
            m = std::max(m, c.face);
        return m;
    }

    friend bool operator==(const GPermutation& lhs, const GPermutation& rhs)
    {
        return lhs.deck_ == rhs.deck_;
    }

    friend std::strong_ordering operator<=>(const GPermutation& lhs, const GPermutation& rhs)
    {
        return lhs.deck_ <=> rhs.deck_;
    }

private:
    std::vector<GCard> deck_;
    std::vector<int> position_; // by card
    std::vector<int> face_;     // by card
};

namespace detail {

inline void require_faces_in(const GPermutation& s, const FiniteGroup& group)
{
    require(s.max_face() < group.order(), "G-permutation: face outside the group");
}

/// Calls visit(faces) for every tuple in G^length, first entry varying slowest.
template <class Visit>
void for_each_face_tuple(int length, int order, Visit&& visit)
{
    std::vector<int> faces(length, 0);
    while (true) {
        visit(static_cast<const std::vector<int>&>(faces));
        int i = length - 1;
        while (i >= 0 && faces[i] == order - 1)
            faces[i--] = 0;
        if (i < 0) return;
        ++faces[i];
    }
}

} // namespace detail

/**
 * Left-to-right product: s sends card m to position p with face g, then t
 * treats that slot as its card p, so m ends at t's position of p with face
 * g times t's face of p.
 */
inline GPermutation g_compose(const GPermutation& s, const GPermutation& t, const FiniteGroup& group)
{
    detail::require(s.size() == t.size(), "g_compose: deck size mismatch");
    detail::require_faces_in(s, group);
    detail::require_faces_in(t, group);
    const int n = s.size();
    std::vector<GCard> deck(n);
    for (int m = 1; m <= n; ++m) {
        const int p = s.position_of(m);
        deck[t.position_of(p) - 1] = {m, group.multiply(s.face_of(m), t.face_of(p))};
    }
    return GPermutation(std::move(deck));
}

/// Erases every face.
inline Permutation abs(const GPermutation& s)
{
    std::vector<int> deck(s.size());
    for (int i = 0; i < s.size(); ++i)
        deck[i] = s.deck()[i].card;
    return Permutation(std::move(deck));
}

/// An element of Q[G wr S_n] with nonnegative integer coefficients, zeros pruned.
class GAlgebraElement {
public:
    using Terms = std::map<GPermutation, BigInt>;

    GAlgebraElement(int n, FiniteGroup group) : n_(n), group_(std::move(group))
    {
        detail::require(n >= 1, "G-algebra element: empty deck");
    }

    int n() const { return n_; }
    const FiniteGroup& group() const { return group_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add(const GPermutation& s, const BigInt& coeff)
    {
        detail::require(s.size() == n_, "G-algebra element: deck size mismatch");
        detail::require_faces_in(s, group_);
        detail::require(coeff >= 0, "G-algebra element: negative coefficient");
        if (coeff == 0) return;
        terms_[s] += coeff;
    }

    BigInt coefficient(const GPermutation& s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    BigInt mass() const
    {
        BigInt sum = 0;
        for (const auto& [s, c] : terms_)
            sum += c;
        return sum;
    }

    GAlgebraElement& operator+=(const GAlgebraElement& other)
    {
        detail::require(other.n_ == n_ && other.group_ == group_, "G-algebra element: mismatch");
        for (const auto& [s, c] : other.terms_)
            terms_[s] += c;
        return *this;
    }

    GAlgebraElement scaled(const BigInt& factor) const
    {
        GAlgebraElement out(n_, group_);
        for (const auto& [s, c] : terms_)
            out.add(s, c * factor);
        return out;
    }

    friend bool operator==(const GAlgebraElement&, const GAlgebraElement&) = default;

private:
    int n_;
    FiniteGroup group_;
    Terms terms_;
};

/**
 * The wreath analogue of B_a: every term of B_a with each lifted card
 * 1..a given every possible face. Cards a+1..n keep the identity face.
 * |G|^a P(n, a) terms, coefficient 1 each.
 */
inline GAlgebraElement hat_top_to_random(int a, int n, const FiniteGroup& group)
{
    detail::require(a >= 1 && a <= n, "hat_top_to_random: need 1 <= a <= n");
    GAlgebraElement out(n, group);
    for (const auto& p : top_to_random_terms(a, n)) {
        detail::for_each_face_tuple(a, group.order(), [&](const std::vector<int>& lifted) {
            std::vector<int> faces(n, 0);
            std::copy(lifted.begin(), lifted.end(), faces.begin());
            out.add(GPermutation::with_faces(p, faces), 1);
        });
    }
    return out;
}

inline std::vector<GPermutation> hat_top_to_random_terms(int a, int n, const FiniteGroup& group)
{
    std::vector<GPermutation> out;
    const GAlgebraElement b = hat_top_to_random(a, n, group);
    for (const auto& [s, c] : b.terms())
        out.push_back(s);
    return out;
}

inline GAlgebraElement g_multiply(const GAlgebraElement& x, const GAlgebraElement& y)
{
    detail::require(x.n() == y.n() && x.group() == y.group(), "g_multiply: mismatched n or group");
    GAlgebraElement out(x.n(), x.group());
    for (const auto& [s, cs] : x.terms())
        for (const auto& [t, ct] : y.terms())
            out.add(g_compose(s, t, x.group()), cs * ct);
    return out;
}

/// Closed form for the number of l-tuples in G^l whose product is g: |G|^(l-1).
inline BigInt factorization_count(int l, int g, const FiniteGroup& group)
{
    detail::require(l >= 1, "factorization_count: l must be >= 1");
    detail::require(group.contains(g), "factorization_count: element outside the group");
    return ipow(group.order(), static_cast<std::uint64_t>(l - 1));
}

/// Enumerates G^l and counts tuples whose product is g.
inline BigInt factorization_count_brute(int l, int g, const FiniteGroup& group,
                                        std::uint64_t cap = 1'000'000)
{
    detail::require(l >= 1, "factorization_count_brute: l must be >= 1");
    detail::require(group.contains(g), "factorization_count_brute: element outside the group");
    detail::check_cap(ipow(group.order(), static_cast<std::uint64_t>(l)), cap, "factorization count");
    std::uint64_t count = 0;
    detail::for_each_face_tuple(l, group.order(), [&](const std::vector<int>& tuple) {
        int product = 0;
        for (int x : tuple)
            product = group.multiply(product, x);
        if (product == g) ++count;
    });
    return count;
}

/// Term count of the wreath product: |G|^(a_1+...+a_k) prod P(n, a_i).
inline BigInt g_shuffle_outcome_count(const ShuffleSpec& spec, const FiniteGroup& group)
{
    return ipow(group.order(), static_cast<std::uint64_t>(spec.total())) * shuffle_outcome_count(spec);
}

/// Coefficient of the wreath B-hat_c in the product: |Q_c| |G|^(sum a_i - c).
inline std::map<int, BigInt> g_expansion(const ShuffleSpec& spec, const FiniteGroup& group)
{
    std::map<int, BigInt> out;
    for (auto& [c, q] : expansion(spec))
        out.emplace(c, q * ipow(group.order(), static_cast<std::uint64_t>(spec.total() - c)));
    return out;
}

/// Brute-force product of B-hat_{a_1} ... B-hat_{a_k}.
inline GAlgebraElement g_brute_force_product(const ShuffleSpec& spec, const FiniteGroup& group,
                                             std::uint64_t cap = default_brute_force_cap)
{
    spec.validate();
    detail::check_cap(g_shuffle_outcome_count(spec, group), cap, "wreath brute force");
    std::vector<std::vector<GPermutation>> factors;
    for (int ai : spec.a)
        factors.push_back(hat_top_to_random_terms(ai, spec.n, group));
    std::map<GPermutation, std::uint64_t> tally;
    for_each_factor_tuple(
        factors, [&](const GPermutation& s, const GPermutation& t) { return g_compose(s, t, group); },
        [&](const auto&, const GPermutation& product) { ++tally[product]; });
    GAlgebraElement out(spec.n, group);
    for (const auto& [s, count] : tally)
        out.add(s, BigInt(count));
    return out;
}

/// sum_c coefficients[c] B-hat_c.
inline GAlgebraElement combine_hat_top_to_random(const std::map<int, BigInt>& coefficients, int n,
                                                 const FiniteGroup& group)
{
    GAlgebraElement out(n, group);
    for (const auto& [c, coeff] : coefficients)
        out += hat_top_to_random(c, n, group).scaled(coeff);
    return out;
}

/// The bar lift: each term sigma becomes the sum of all |G|^n G-decks with abs = sigma.
inline GAlgebraElement bar_lift(const AlgebraElement& x, const FiniteGroup& group)
{
    GAlgebraElement out(x.n(), group);
    for (const auto& [p, c] : x.terms())
        detail::for_each_face_tuple(x.n(), group.order(), [&](const std::vector<int>& faces) {
            out.add(GPermutation::with_faces(p, faces), c);
        });
    return out;
}

/**
 * Lifts a nonnegative expansion B_{p_1}...B_{p_k} = sum_r C_r B_r to the
 * bar elements: each C_r is multiplied by (|G|^(k-1))^n.
 */
inline std::map<int, BigInt> bar_lift_expansion(const std::map<int, BigInt>& base_coefficients, int k,
                                                int n, const FiniteGroup& group)
{
    detail::require(k >= 1, "bar_lift_expansion: k must be >= 1");
    detail::require(n >= 1, "bar_lift_expansion: n must be >= 1");
    const BigInt scale = ipow(ipow(group.order(), static_cast<std::uint64_t>(k - 1)),
                              static_cast<std::uint64_t>(n));
    std::map<int, BigInt> out;
    for (const auto& [r, c] : base_coefficients) {
        detail::require(c >= 0, "bar_lift_expansion: negative base coefficient");
        out.emplace(r, c * scale);
    }
    return out;
}

} // namespace toprand
