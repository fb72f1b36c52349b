#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "bigint.hpp"
#include "bijection.hpp"
#include "error.hpp"
#include "gperm.hpp"
#include "permutation.hpp"
#include "segmented_partition.hpp"
#include "shuffle_algebra.hpp"

// JSON wire formats. Big integers travel as decimal strings; cards and
// positions are 1-based; group element 0 is the identity.

namespace toprand {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto parse_guard(const char* what, F&& f)
{
    try {
        return f();
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception& e) {
        throw InvalidArgument(std::string(what) + ": " + e.what());
    }
}

inline BigInt parse_bigint(const Json& j)
{
    const std::string s = j.get<std::string>();
    require(!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos,
            "expected a decimal integer string, got \"" + s + "\"");
    return BigInt(s);
}

} // namespace detail

inline Json serialize(const Permutation& p)
{
    return Json(std::vector<int>(p.deck().begin(), p.deck().end()));
}

inline Permutation parse_permutation(const Json& j)
{
    return detail::parse_guard("permutation", [&] {
        detail::require(j.is_array(), "expected an array of cards");
        return Permutation(j.get<std::vector<int>>());
    });
}

inline Json serialize(const Injection& inj)
{
    return Json{{"a", inj.a}, {"targets", inj.targets}};
}

inline Injection parse_injection(const Json& j)
{
    return detail::parse_guard("injection", [&] {
        Injection inj;
        inj.a = j.at("a").get<int>();
        inj.targets = j.at("targets").get<std::vector<int>>();
        detail::require(inj.a == static_cast<int>(inj.targets.size()), "a must equal the number of targets");
        return inj;
    });
}

inline Json serialize(const AlgebraElement& x)
{
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms())
        terms.push_back(Json{{"deck", serialize(p)}, {"coeff", c.str()}});
    return Json{{"n", x.n()}, {"terms", std::move(terms)}};
}

inline AlgebraElement parse_algebra_element(const Json& j)
{
    return detail::parse_guard("algebra element", [&] {
        AlgebraElement x(j.at("n").get<int>());
        for (const auto& term : j.at("terms"))
            x.add(parse_permutation(term.at("deck")), detail::parse_bigint(term.at("coeff")));
        return x;
    });
}

inline Json serialize(const SegmentedPartition& alpha)
{
    return Json(alpha.parts);
}

inline SegmentedPartition parse_partition(const Json& j)
{
    return detail::parse_guard("partition", [&] {
        SegmentedPartition alpha;
        alpha.parts = j.get<std::vector<std::vector<int>>>();
        return alpha;
    });
}

inline Json serialize(const ShuffleTuple& tuple)
{
    Json out = Json::array();
    for (const auto& sigma : tuple.sigmas)
        out.push_back(serialize(sigma));
    return out;
}

inline ShuffleTuple parse_tuple(const Json& j)
{
    return detail::parse_guard("shuffle tuple", [&] {
        detail::require(j.is_array(), "expected an array of decks");
        ShuffleTuple tuple;
        for (const auto& deck : j)
            tuple.sigmas.push_back(parse_permutation(deck));
        return tuple;
    });
}

inline Json serialize(const FiniteGroup& group)
{
    return Json{{"order", group.order()}, {"cayley", group.cayley()}};
}

inline FiniteGroup parse_group(const Json& j)
{
    return detail::parse_guard("group", [&] {
        const int order = j.at("order").get<int>();
        auto table = j.at("cayley").get<std::vector<std::vector<int>>>();
        detail::require(static_cast<int>(table.size()) == order, "order does not match the table");
        return FiniteGroup(std::move(table));
    });
}

inline Json serialize(const GPermutation& s)
{
    Json out = Json::array();
    for (const auto& c : s.deck())
        out.push_back(Json{{"face", c.face}, {"card", c.card}});
    return out;
}

inline GPermutation parse_gpermutation(const Json& j)
{
    return detail::parse_guard("G-permutation", [&] {
        detail::require(j.is_array(), "expected an array of {face, card} objects");
        std::vector<GCard> deck;
        for (const auto& c : j)
            deck.push_back({c.at("card").get<int>(), c.at("face").get<int>()});
        return GPermutation(std::move(deck));
    });
}

inline Json serialize(const GAlgebraElement& x)
{
    Json terms = Json::array();
    for (const auto& [s, c] : x.terms())
        terms.push_back(Json{{"deck", serialize(s)}, {"coeff", c.str()}});
    return Json{{"n", x.n()}, {"group", serialize(x.group())}, {"terms", std::move(terms)}};
}

inline GAlgebraElement parse_galgebra_element(const Json& j)
{
    return detail::parse_guard("G-algebra element", [&] {
        GAlgebraElement x(j.at("n").get<int>(), parse_group(j.at("group")));
        for (const auto& term : j.at("terms"))
            x.add(parse_gpermutation(term.at("deck")), detail::parse_bigint(term.at("coeff")));
        return x;
    });
}

inline Json serialize(const Rational& r)
{
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

inline Rational parse_rational(const Json& j)
{
    return detail::parse_guard("rational", [&] {
        const BigInt den = detail::parse_bigint(j.at("den"));
        detail::require(den != 0, "zero denominator");
        return Rational(detail::parse_bigint(j.at("num")), den);
    });
}

/// Expansion maps: {"j": "coefficient", ...} in increasing j.
inline Json serialize(const std::map<int, BigInt>& coefficients)
{
    Json out = Json::object();
    for (const auto& [j, c] : coefficients)
        out[std::to_string(j)] = c.str();
    return out;
}

inline std::map<int, BigInt> parse_coefficients(const Json& j)
{
    return detail::parse_guard("coefficients", [&] {
        detail::require(j.is_object(), "expected an object");
        std::map<int, BigInt> out;
        for (const auto& [key, value] : j.items())
            out.emplace(std::stoi(key), detail::parse_bigint(value));
        return out;
    });
}

} // namespace toprand
