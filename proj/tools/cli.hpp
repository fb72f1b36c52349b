#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <toprand/toprand.hpp>

namespace toprand::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidArguments = 1,
    kCapExceeded = 2,
    kMismatch = 3,
};

/// Environment variable holding the default brute-force tuple cap.
inline constexpr const char* kCapEnv = "TOPRAND_BRUTE_CAP";

namespace detail {

struct Options {
    int n = 0;
    std::string a;
    std::string group;
    std::string format = "json";
    std::optional<std::uint64_t> cap;
    int j = 0;
    int k = 0;
    int precision = 12;
    std::string tuple;
    std::string partition;
    std::string target;
};

inline ShuffleSpec make_spec(const Options& o)
{
    ShuffleSpec spec;
    spec.n = o.n;
    std::stringstream in(o.a);
    std::string item;
    while (std::getline(in, item, ',')) {
        ::toprand::detail::require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                                   "--a: expected comma-separated positive integers, got \"" + o.a + "\"");
        spec.a.push_back(std::stoi(item));
    }
    spec.validate();
    return spec;
}

inline std::optional<FiniteGroup> make_group(const std::string& text)
{
    if (text.empty()) return std::nullopt;
    if (text.rfind("cyclic:", 0) == 0) {
        const std::string m = text.substr(7);
        ::toprand::detail::require(!m.empty() && m.find_first_not_of("0123456789") == std::string::npos,
                                   "--group cyclic:M needs a positive integer M");
        return FiniteGroup::cyclic(std::stoi(m));
    }
    if (text.rfind("table:", 0) == 0) {
        const std::string path = text.substr(6);
        std::ifstream file(path);
        ::toprand::detail::require(file.good(), "--group: cannot open " + path);
        Json j;
        try {
            j = Json::parse(file);
        } catch (const std::exception& e) {
            throw InvalidArgument("--group: " + path + ": " + e.what());
        }
        return parse_group(j);
    }
    throw InvalidArgument("--group must be cyclic:M or table:FILE");
}

inline Json parse_json_arg(const std::string& text, const char* flag)
{
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidArgument(std::string(flag) + ": " + e.what());
    }
}

inline std::uint64_t resolve_cap(const Options& o)
{
    if (o.cap) return *o.cap;
    if (const char* env = std::getenv(kCapEnv)) {
        const std::string s = env;
        ::toprand::detail::require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
                                   std::string(kCapEnv) + " must be a nonnegative integer");
        return std::stoull(s);
    }
    return default_brute_force_cap;
}

inline std::string deck_text(const Permutation& p)
{
    std::string s;
    for (int c : p.deck())
        s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

inline std::string deck_text(const GPermutation& s)
{
    std::string out;
    for (const auto& c : s.deck())
        out += (out.empty() ? "" : " ") + std::to_string(c.card) + (c.face ? "^" + std::to_string(c.face) : "");
    return out;
}

inline std::string partition_text(const SegmentedPartition& alpha)
{
    std::string s;
    for (const auto& part : alpha.parts) {
        s += "{";
        for (std::size_t i = 0; i < part.size(); ++i)
            s += (i ? "," : "") + std::to_string(part[i]);
        s += "}";
    }
    return s;
}

inline void print_coefficients(std::ostream& out, const std::map<int, BigInt>& coeffs, bool text)
{
    if (!text) {
        out << serialize(coeffs).dump() << '\n';
        return;
    }
    std::size_t width = 1;
    for (const auto& [j, c] : coeffs)
        width = std::max(width, std::to_string(j).size());
    for (const auto& [j, c] : coeffs)
        out << std::setw(static_cast<int>(width)) << j << "  " << c << '\n';
}

template <class Element>
void print_element(std::ostream& out, const Element& x, bool text)
{
    if (!text) {
        out << serialize(x).dump() << '\n';
        return;
    }
    for (const auto& [deck, c] : x.terms())
        out << deck_text(deck) << "  " << c << '\n';
}

inline std::string decimal(const Rational& r, int precision)
{
    // Display only: exact value is the fraction.
    BigInt scaled = numerator(r) * ipow(10, static_cast<std::uint64_t>(precision)) / denominator(r);
    std::string digits = scaled.str();
    if (precision == 0) return digits;
    if (static_cast<int>(digits.size()) <= precision)
        digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(precision), ".");
    return digits;
}

template <class Element, class Key>
void report_mismatch(std::ostream& out, std::ostream& err, const Element& expected, const Element& brute,
                     const Key& key, bool text)
{
    if (text) {
        out << "mismatch at " << deck_text(key) << ": expansion " << expected.coefficient(key) << ", brute force "
            << brute.coefficient(key) << '\n';
    } else {
        out << Json{{"match", false},
                    {"deck", serialize(key)},
                    {"expansion", expected.coefficient(key).str()},
                    {"brute", brute.coefficient(key).str()}}
                   .dump()
            << '\n';
    }
    err << "verify: expansion and brute-force product differ\n";
}

inline int run_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const ShuffleSpec spec = make_spec(o);
    const bool text = o.format == "text";
    const std::uint64_t cap = resolve_cap(o);
    auto finish = [&](const auto& expected, const auto& brute) {
        if (auto diff = first_difference(expected, brute)) {
            report_mismatch(out, err, expected, brute, *diff, text);
            return static_cast<int>(kMismatch);
        }
        if (text)
            out << "match: " << brute.term_count() << " terms, mass " << brute.mass() << '\n';
        else
            out << Json{{"match", true}, {"terms", brute.term_count()}, {"mass", brute.mass().str()}}.dump()
                << '\n';
        return static_cast<int>(kOk);
    };
    if (auto group = make_group(o.group)) {
        const auto brute = g_brute_force_product(spec, *group, cap);
        return finish(combine_hat_top_to_random(g_expansion(spec, *group), spec.n, *group), brute);
    }
    const auto brute = brute_force_product(spec, cap);
    return finish(combine_top_to_random(expansion(spec), spec.n), brute);
}

inline int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err)
{
    const bool text = o.format == "text";

    if (command == "expand") {
        const ShuffleSpec spec = make_spec(o);
        const auto group = make_group(o.group);
        print_coefficients(out, group ? g_expansion(spec, *group) : expansion(spec), text);
        return kOk;
    }
    if (command == "brute") {
        const ShuffleSpec spec = make_spec(o);
        if (auto group = make_group(o.group))
            print_element(out, g_brute_force_product(spec, *group, resolve_cap(o)), text);
        else
            print_element(out, brute_force_product(spec, resolve_cap(o)), text);
        return kOk;
    }
    if (command == "verify") return run_verify(o, out, err);
    if (command == "coeff") {
        const BigInt q = q_cardinality(make_spec(o), o.j);
        out << (text ? q.str() : Json(q.str()).dump()) << '\n';
        return kOk;
    }
    if (command == "partitions") {
        const ShuffleSpec spec = make_spec(o);
        ::toprand::detail::require(o.j >= 1, "--j must be >= 1");
        bool first = true;
        if (!text) out << "[";
        for_each_segmented_partition(spec.a, o.j, [&](const SegmentedPartition& alpha) {
            if (text)
                out << partition_text(alpha) << '\n';
            else
                out << (first ? "\n" : ",\n") << serialize(alpha).dump();
            first = false;
        });
        if (!text) out << (first ? "]" : "\n]") << '\n';
        return kOk;
    }
    if (command == "phi") {
        const ShuffleSpec spec = make_spec(o);
        const auto alpha = phi(parse_tuple(parse_json_arg(o.tuple, "--tuple")), spec);
        if (text)
            out << "j=" << alpha.part_count() << "  " << partition_text(alpha) << '\n';
        else
            out << Json{{"j", alpha.part_count()}, {"partition", serialize(alpha)}}.dump() << '\n';
        return kOk;
    }
    if (command == "phi-inverse") {
        const ShuffleSpec spec = make_spec(o);
        const auto alpha = parse_partition(parse_json_arg(o.partition, "--partition"));
        const auto t = parse_permutation(parse_json_arg(o.target, "--target"));
        const auto tuple = phi_inverse(alpha, t, spec);
        if (text)
            for (const auto& sigma : tuple.sigmas)
                out << deck_text(sigma) << '\n';
        else
            out << serialize(tuple).dump() << '\n';
        return kOk;
    }
    if (command == "prob") {
        const ShuffleSpec spec = make_spec(o);
        const Json target = parse_json_arg(o.target, "--target");
        BigInt ways;
        Rational p;
        if (auto group = make_group(o.group)) {
            const auto g_target = parse_gpermutation(target);
            ways = g_ways_to_reach(g_target, spec, *group);
            p = g_probability_of(g_target, spec, *group);
        } else {
            const auto plain = parse_permutation(target);
            ways = ways_to_reach(plain, spec);
            p = probability_of(plain, spec);
        }
        if (text)
            out << "ways         " << ways << '\n'
                << "probability  " << p << '\n'
                << "approx       " << decimal(p, o.precision) << '\n';
        else
            out << Json{{"ways", ways.str()}, {"probability", serialize(p)}}.dump() << '\n';
        return kOk;
    }
    if (command == "stirling" || command == "bell") {
        ::toprand::detail::require(o.k >= 0 && o.j >= 0, "--k and --j must be nonnegative");
        const BigInt value = command == "bell" ? bell(o.k) : stirling2(o.k, o.j);
        out << (text ? value.str() : Json(value.str()).dump()) << '\n';
        return kOk;
    }
    throw InvalidArgument("unknown subcommand " + command);
}

} // namespace detail

/**
 * Runs one command line (without the program name). Data goes to `out`,
 * diagnostics to `err`. Exit codes: 0 ok, 1 invalid arguments, 2 brute-force
 * cap exceeded, 3 verification mismatch.
 */
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    detail::Options o;
    CLI::App app{"Exact expansions of products of top-to-random shuffles", "toprand"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "deck size")->required();
        sub->add_option("--a", o.a, "shuffle sizes a1,...,ak")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", o.group, "cyclic:M or table:FILE (Cayley-table JSON)");
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", o.cap, std::string("brute-force tuple cap (default $") + kCapEnv + " or 1e7)");
    };

    auto* expand = app.add_subcommand("expand", "coefficients of the expansion in B_j (or B-hat_c)");
    add_spec(expand), add_group(expand), add_format(expand);
    auto* brute = app.add_subcommand("brute", "full product by enumerating every tuple of terms");
    add_spec(brute), add_group(brute), add_format(brute), add_cap(brute);
    auto* verify = app.add_subcommand("verify", "compare the expansion against the brute-force product");
    add_spec(verify), add_group(verify), add_format(verify), add_cap(verify);
    auto* coeff = app.add_subcommand("coeff", "|Q_j| for the spec");
    add_spec(coeff), add_format(coeff);
    coeff->add_option("--j", o.j)->required();
    auto* parts = app.add_subcommand("partitions", "list the segmented j-part partitions");
    add_spec(parts), add_format(parts);
    parts->add_option("--j", o.j)->required();
    auto* phi_cmd = app.add_subcommand("phi", "segmented partition of a shuffle tuple");
    add_spec(phi_cmd), add_format(phi_cmd);
    phi_cmd->add_option("--tuple", o.tuple, "JSON array of decks")->required();
    auto* phi_inv = app.add_subcommand("phi-inverse", "shuffle tuple from a partition and a target deck");
    add_spec(phi_inv), add_format(phi_inv);
    phi_inv->add_option("--partition", o.partition, "JSON list of parts")->required();
    phi_inv->add_option("--target", o.target, "JSON deck")->required();
    auto* prob = app.add_subcommand("prob", "ways and exact probability of reaching a deck");
    add_spec(prob), add_group(prob), add_format(prob);
    prob->add_option("--target", o.target, "JSON deck (or [{face, card}] with --group)")->required();
    prob->add_option("--precision", o.precision, "decimal digits in text output")->check(CLI::Range(0, 1000));
    auto* stirling = app.add_subcommand("stirling", "Stirling number of the second kind S(k, j)");
    stirling->add_option("--k", o.k)->required();
    stirling->add_option("--j", o.j)->required();
    add_format(stirling);
    auto* bell_cmd = app.add_subcommand("bell", "Bell number b_k");
    bell_cmd->add_option("--k", o.k)->required();
    add_format(bell_cmd);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        return detail::dispatch(app.get_subcommands().front()->get_name(), o, out, err);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }
}

} // namespace toprand::cli
