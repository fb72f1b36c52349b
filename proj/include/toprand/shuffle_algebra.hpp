#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coefficients.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "shuffle_spec.hpp"

namespace toprand {

/// A word of pairwise distinct card labels.
using Word = std::vector<int>;

/// All interleavings of u and v keeping each word's internal order. With
/// distinct letters every interleaving is a distinct word, so the result is
/// a set of C(|u|+|v|, |u|) words.
inline std::vector<Word> shuffle_product(const Word& u, const Word& v)
{
    std::set<int> letters;
    for (int x : u)
        detail::require(letters.insert(x).second, "shuffle_product: repeated letter");
    for (int x : v)
        detail::require(letters.insert(x).second, "shuffle_product: words share a letter");

    std::vector<Word> out;
    Word w;
    w.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t k) -> void {
        if (i == u.size() && k == v.size()) {
            out.push_back(w);
            return;
        }
        if (i < u.size()) {
            w.push_back(u[i]);
            self(self, i + 1, k);
            w.pop_back();
        }
        if (k < v.size()) {
            w.push_back(v[k]);
            self(self, i, k + 1);
            w.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Default bound on the number of tuples a brute-force product may enumerate.
inline constexpr std::uint64_t default_brute_force_cap = 10'000'000;

/**
 * An element of Q[S_n] with nonnegative integer coefficients. Zero
 * coefficients are never stored, so equality is exact map equality.
 */
class AlgebraElement {
public:
    using Terms = std::map<Permutation, BigInt>;

    explicit AlgebraElement(int n) : n_(n)
    {
        detail::require(n >= 1, "algebra element: empty deck");
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add(const Permutation& p, const BigInt& coeff)
    {
        detail::require(p.size() == n_, "algebra element: deck size mismatch");
        detail::require(coeff >= 0, "algebra element: negative coefficient");
        if (coeff == 0) return;
        terms_[p] += coeff;
    }

    BigInt coefficient(const Permutation& p) const
    {
        auto it = terms_.find(p);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Sum of all coefficients.
    BigInt mass() const
    {
        BigInt sum = 0;
        for (const auto& [p, c] : terms_)
            sum += c;
        return sum;
    }

    AlgebraElement& operator+=(const AlgebraElement& other)
    {
        detail::require(other.n_ == n_, "algebra element: deck size mismatch");
        for (const auto& [p, c] : other.terms_)
            terms_[p] += c;
        return *this;
    }

    AlgebraElement scaled(const BigInt& factor) const
    {
        AlgebraElement out(n_);
        for (const auto& [p, c] : terms_)
            out.add(p, c * factor);
        return out;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    int n_;
    Terms terms_;
};

/**
 * B_a = 1 ⧢ 2 ⧢ ... ⧢ a ⧢ W_{a,n} with W_{a,n} = (a+1)(a+2)...n: every deck
 * reachable by lifting cards 1..a and reinserting them. P(n, a) terms.
 */
inline AlgebraElement top_to_random(int a, int n)
{
    detail::require(a >= 1 && a <= n, "top_to_random: need 1 <= a <= n");
    std::vector<Word> words{Word{1}};
    for (int card = 2; card <= a; ++card) {
        std::vector<Word> next;
        for (const auto& w : words)
            for (auto& s : shuffle_product(w, Word{card}))
                next.push_back(std::move(s));
        words = std::move(next);
    }
    Word tail;
    for (int card = a + 1; card <= n; ++card)
        tail.push_back(card);

    AlgebraElement out(n);
    for (const auto& w : words)
        for (auto& deck : shuffle_product(w, tail))
            out.add(Permutation(std::move(deck)), 1);
    return out;
}

/// Terms of B_a as a list in canonical order.
inline std::vector<Permutation> top_to_random_terms(int a, int n)
{
    const AlgebraElement b = top_to_random(a, n);
    std::vector<Permutation> out;
    for (const auto& [p, c] : b.terms())
        out.push_back(p);
    return out;
}

/// Convolution: (xy)[r] = sum over pq = r of x[p] y[q].
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y)
{
    detail::require(x.n() == y.n(), "multiply: deck size mismatch");
    AlgebraElement out(x.n());
    for (const auto& [p, cp] : x.terms())
        for (const auto& [q, cq] : y.terms())
            out.add(compose(p, q), cp * cq);
    return out;
}

/**
 * Depth-first walk over every tuple (f_1, ..., f_k) with f_i drawn from
 * factors[i], reporting the chosen entries and their left-to-right product.
 * Prefix products are shared between tuples with a common prefix.
 */
template <class Elem, class Compose, class Visit>
void for_each_factor_tuple(const std::vector<std::vector<Elem>>& factors, Compose&& combine,
                           Visit&& visit)
{
    if (factors.empty()) return;
    std::vector<const Elem*> chosen(factors.size(), nullptr);
    auto rec = [&](auto&& self, std::size_t depth, const Elem& prefix) -> void {
        if (depth == factors.size()) {
            visit(static_cast<const std::vector<const Elem*>&>(chosen), prefix);
            return;
        }
        for (const Elem& e : factors[depth]) {
            chosen[depth] = &e;
            self(self, depth + 1, combine(prefix, e));
        }
    };
    for (const Elem& first : factors[0]) {
        chosen[0] = &first;
        rec(rec, 1, first);
    }
}

/// Number of terms in B_{a_1} ... B_{a_k}, counted with multiplicity: prod P(n, a_i).
inline BigInt shuffle_outcome_count(const ShuffleSpec& spec)
{
    spec.validate();
    BigInt count = 1;
    for (int ai : spec.a)
        count *= falling_factorial(spec.n, ai);
    return count;
}

namespace detail {

inline void check_cap(const BigInt& predicted, std::uint64_t cap, const char* what)
{
    if (predicted > cap)
        throw CapExceeded(std::string(what) + ": " + predicted.str() +
                          " tuples exceed the cap of " + std::to_string(cap));
}

} // namespace detail

/// Visits every tuple (sigma_1..sigma_k) of B_{a_1} x ... x B_{a_k} with its product.
template <class Visit>
void for_each_shuffle_tuple(const ShuffleSpec& spec, std::uint64_t cap, Visit&& visit)
{
    spec.validate();
    detail::check_cap(shuffle_outcome_count(spec), cap, "brute force");
    std::vector<std::vector<Permutation>> factors;
    for (int ai : spec.a)
        factors.push_back(top_to_random_terms(ai, spec.n));
    for_each_factor_tuple(factors, [](const Permutation& p, const Permutation& q) { return compose(p, q); },
                          std::forward<Visit>(visit));
}

/**
 * The product B_{a_1} ... B_{a_k} by enumerating every tuple of terms and
 * tallying products. Throws CapExceeded before doing any work if the tuple
 * count is above `cap`.
 */
inline AlgebraElement brute_force_product(const ShuffleSpec& spec,
                                          std::uint64_t cap = default_brute_force_cap)
{
    std::map<Permutation, std::uint64_t> tally;
    for_each_shuffle_tuple(spec, cap, [&](const auto&, const Permutation& product) { ++tally[product]; });
    AlgebraElement out(spec.n);
    for (const auto& [p, count] : tally)
        out.add(p, BigInt(count));
    return out;
}

/// sum_j coefficients[j] B_j.
inline AlgebraElement combine_top_to_random(const std::map<int, BigInt>& coefficients, int n)
{
    AlgebraElement out(n);
    for (const auto& [j, c] : coefficients)
        out += top_to_random(j, n).scaled(c);
    return out;
}

/// First term (in canonical order) whose coefficients differ, if any.
template <class Element>
std::optional<typename Element::Terms::key_type> first_difference(const Element& x, const Element& y)
{
    auto ix = x.terms().begin();
    auto iy = y.terms().begin();
    while (ix != x.terms().end() || iy != y.terms().end()) {
        if (iy == y.terms().end() || (ix != x.terms().end() && ix->first < iy->first)) return ix->first;
        if (ix == x.terms().end() || iy->first < ix->first) return iy->first;
        if (ix->second != iy->second) return ix->first;
        ++ix;
        ++iy;
    }
    return std::nullopt;
}

} // namespace toprand
